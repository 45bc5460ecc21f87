#ifndef TORICMIRROR_IO_HPP
#define TORICMIRROR_IO_HPP

#include "toricmirror.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace toricmirror {

using Json = nlohmann::ordered_json;

inline constexpr int kInputVersion = 1;
inline constexpr int kReportVersion = 1;

struct Options {
    long long search_margin = 1;
    double epsilon = 0;  // 0 = automatic
    int quadrature_order = 24;
    long long samples = 200;
    std::uint64_t seed = 0;
};

struct TwistingEntry {
    std::optional<std::string> region;  // "C<i>", "fan" or omitted
    std::optional<std::vector<LatticeVec>> rays;
    IntVector ell;
};

struct InputDocument {
    int version = kInputVersion;
    std::string name;
    std::optional<SubdividedPolytope> polytope;
    std::optional<std::vector<LatticeVec>> fan;
    std::map<std::string, TwistingEntry> twisting;
    std::map<std::string, IntVector> kinks;
    Options options;
};

// Line/column of every value in a JSON text, keyed by JSON pointer.
class JsonLocator {
public:
    struct Pos {
        std::size_t line = 1, column = 1;
    };

    explicit JsonLocator(const std::string& text) : s_(text) { value(""); }

    static Pos at_offset(const std::string& text, std::size_t offset)
    {
        Pos p;
        for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++p.line;
                p.column = 1;
            } else {
                ++p.column;
            }
        }
        return p;
    }

    Pos find(const std::string& pointer) const
    {
        auto it = where_.find(pointer);
        return it == where_.end() ? Pos{} : it->second;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
    Pos pos_;
    std::map<std::string, Pos> where_;

    void step()
    {
        if (s_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++i_;
    }
    void ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) step();
    }
    std::string string_token()
    {
        std::string out;
        step();  // opening quote
        while (i_ < s_.size() && s_[i_] != '"') {
            if (s_[i_] == '\\') {
                step();
                out += s_[i_];
            } else {
                out += s_[i_];
            }
            step();
        }
        if (i_ < s_.size()) step();
        return out;
    }
    static std::string escape(const std::string& key)
    {
        std::string out;
        for (char c : key) {
            if (c == '~') out += "~0";
            else if (c == '/') out += "~1";
            else out += c;
        }
        return out;
    }
    void value(const std::string& ptr)
    {
        ws();
        if (i_ >= s_.size()) return;
        where_[ptr] = pos_;
        char c = s_[i_];
        if (c == '{') {
            step();
            ws();
            while (i_ < s_.size() && s_[i_] != '}') {
                std::string key = string_token();
                ws();
                step();  // ':'
                value(ptr + "/" + escape(key));
                ws();
                if (i_ < s_.size() && s_[i_] == ',') {
                    step();
                    ws();
                }
            }
            if (i_ < s_.size()) step();
        } else if (c == '[') {
            step();
            ws();
            std::size_t k = 0;
            while (i_ < s_.size() && s_[i_] != ']') {
                value(ptr + "/" + std::to_string(k++));
                ws();
                if (i_ < s_.size() && s_[i_] == ',') {
                    step();
                    ws();
                }
            }
            if (i_ < s_.size()) step();
        } else if (c == '"') {
            string_token();
        } else {
            while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != ',' &&
                   s_[i_] != '}' && s_[i_] != ']')
                step();
        }
    }
};

namespace detail {

class Reader {
public:
    explicit Reader(const std::string& text) : loc_(text) {}

    [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const
    {
        auto p = loc_.find(ptr);
        throw InputError("line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": " + msg +
                         (ptr.empty() ? "" : " (at " + ptr + ")"));
    }

    void keys(const nlohmann::json& j, const std::string& ptr, std::initializer_list<const char*> allowed,
              std::initializer_list<const char*> required = {}) const
    {
        if (!j.is_object()) fail(ptr, "expected an object");
        std::set<std::string> ok(allowed.begin(), allowed.end());
        for (auto it = j.begin(); it != j.end(); ++it)
            if (!ok.count(it.key())) fail(ptr + "/" + it.key(), "unknown key '" + it.key() + "'");
        for (const char* r : required)
            if (!j.contains(r)) fail(ptr, std::string("missing key '") + r + "'");
    }

    Integer integer(const nlohmann::json& j, const std::string& ptr) const
    {
        if (j.is_number_integer()) return Integer(j.get<long long>());
        if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
        if (j.is_string()) {
            const auto& s = j.get_ref<const std::string&>();
            bool digits = !s.empty();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (!(std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1)))
                    digits = false;
            if (digits) return Integer(s);
        }
        fail(ptr, "expected an integer");
    }

    long long small(const nlohmann::json& j, const std::string& ptr, long long lo, long long hi) const
    {
        Integer v = integer(j, ptr);
        if (v < lo || v > hi) fail(ptr, "value out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return static_cast<long long>(v);
    }

    IntVector int_list(const nlohmann::json& j, const std::string& ptr) const
    {
        if (!j.is_array()) fail(ptr, "expected an array of integers");
        IntVector out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], ptr + "/" + std::to_string(i)));
        return out;
    }

    LatticeVec vec(const nlohmann::json& j, const std::string& ptr) const
    {
        if (!j.is_array() || j.size() != 2) fail(ptr, "expected a pair [x, y]");
        return {integer(j[0], ptr + "/0"), integer(j[1], ptr + "/1")};
    }

    std::vector<LatticeVec> vec_list(const nlohmann::json& j, const std::string& ptr) const
    {
        if (!j.is_array()) fail(ptr, "expected an array of pairs");
        std::vector<LatticeVec> out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vec(j[i], ptr + "/" + std::to_string(i)));
        return out;
    }

private:
    JsonLocator loc_;
};

}  // namespace detail

inline InputDocument parse_input(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto p = JsonLocator::at_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string what = e.what();
        auto cut = what.find("syntax error");
        throw InputError("line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": " +
                         (cut == std::string::npos ? what : what.substr(cut)));
    }
    detail::Reader r(text);
    r.keys(j, "", {"version", "name", "polytope", "fan", "twisting", "kinks", "options"}, {"version"});
    InputDocument doc;
    doc.version = static_cast<int>(r.small(j["version"], "/version", 0, 1000));
    if (doc.version != kInputVersion) r.fail("/version", "unsupported version " + std::to_string(doc.version));
    if (j.contains("name")) {
        if (!j["name"].is_string()) r.fail("/name", "expected a string");
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("polytope")) {
        const auto& p = j["polytope"];
        r.keys(p, "/polytope", {"points", "triangles", "nu"}, {"points", "triangles", "nu"});
        SubdividedPolytope s;
        s.points = r.vec_list(p["points"], "/polytope/points");
        const auto& t = p["triangles"];
        if (!t.is_array()) r.fail("/polytope/triangles", "expected an array of index triples");
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::string ptr = "/polytope/triangles/" + std::to_string(i);
            if (!t[i].is_array() || t[i].size() != 3) r.fail(ptr, "expected three point indices");
            TriangleIndex tri;
            for (std::size_t k = 0; k < 3; ++k) {
                std::string kp = ptr + "/" + std::to_string(k);
                long long v = r.small(t[i][k], kp, 0, 1LL << 40);
                if (v >= static_cast<long long>(s.points.size())) r.fail(kp, "point index out of range");
                tri[k] = static_cast<std::size_t>(v);
            }
            s.triangles.push_back(tri);
        }
        s.nu = r.int_list(p["nu"], "/polytope/nu");
        if (s.nu.size() != s.points.size()) r.fail("/polytope/nu", "nu needs one value per point");
        doc.polytope = std::move(s);
    }
    if (j.contains("fan")) {
        r.keys(j["fan"], "/fan", {"rays"}, {"rays"});
        doc.fan = r.vec_list(j["fan"]["rays"], "/fan/rays");
    }
    if (j.contains("twisting")) {
        const auto& t = j["twisting"];
        if (!t.is_object()) r.fail("/twisting", "expected an object of named twisting sets");
        for (auto it = t.begin(); it != t.end(); ++it) {
            std::string ptr = "/twisting/" + it.key();
            r.keys(*it, ptr, {"region", "rays", "ell"}, {"ell"});
            TwistingEntry e;
            if (it->contains("region")) {
                const auto& reg = (*it)["region"];
                if (reg.is_string()) e.region = reg.get<std::string>();
                else if (reg.is_number_integer()) e.region = "C" + std::to_string(reg.get<long long>());
                else r.fail(ptr + "/region", "expected a region name or index");
            }
            if (it->contains("rays")) e.rays = r.vec_list((*it)["rays"], ptr + "/rays");
            e.ell = r.int_list((*it)["ell"], ptr + "/ell");
            if (e.rays && e.rays->size() != e.ell.size()) r.fail(ptr + "/ell", "ell needs one entry per ray");
            doc.twisting.emplace(it.key(), std::move(e));
        }
    }
    if (j.contains("kinks")) {
        const auto& k = j["kinks"];
        if (!k.is_object()) r.fail("/kinks", "expected an object of named kink vectors");
        for (auto it = k.begin(); it != k.end(); ++it) doc.kinks.emplace(it.key(), r.int_list(*it, "/kinks/" + it.key()));
    }
    if (j.contains("options")) {
        const auto& o = j["options"];
        r.keys(o, "/options", {"search_margin", "epsilon", "quadrature_order", "samples", "seed"});
        if (o.contains("search_margin")) doc.options.search_margin = r.small(o["search_margin"], "/options/search_margin", 1, 1000);
        if (o.contains("epsilon")) {
            if (!o["epsilon"].is_number() || o["epsilon"].get<double>() < 0)
                r.fail("/options/epsilon", "expected a non-negative number (0 = automatic)");
            doc.options.epsilon = o["epsilon"].get<double>();
        }
        if (o.contains("quadrature_order"))
            doc.options.quadrature_order = static_cast<int>(r.small(o["quadrature_order"], "/options/quadrature_order", 2, 256));
        if (o.contains("samples")) doc.options.samples = r.small(o["samples"], "/options/samples", 1, 1000000);
        if (o.contains("seed")) doc.options.seed = static_cast<std::uint64_t>(r.small(o["seed"], "/options/seed", 0, 1LL << 53));
    }
    return doc;
}

inline InputDocument load_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str());
}

// Exact integers stay JSON numbers while they fit, strings beyond that.
inline Json to_json(const Integer& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}
inline Json to_json(const Rational& q) { return to_string(q); }
inline Json to_json(const LatticeVec& v) { return Json::array({to_json(v.x), to_json(v.y)}); }
inline Json to_json(const RationalPoint& p) { return Json::array({to_json(p.x), to_json(p.y)}); }
inline Json to_json(const HalfLatticeVec& h) { return Json::array({to_json(h.x()), to_json(h.y())}); }

template <class T>
Json to_json(const std::vector<T>& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const InputDocument& doc)
{
    Json j;
    j["version"] = doc.version;
    if (!doc.name.empty()) j["name"] = doc.name;
    if (doc.polytope) {
        Json tris = Json::array();
        for (const auto& t : doc.polytope->triangles) tris.push_back({t[0], t[1], t[2]});
        j["polytope"] = {{"points", to_json(doc.polytope->points)}, {"triangles", tris}, {"nu", to_json(doc.polytope->nu)}};
    }
    if (doc.fan) j["fan"] = {{"rays", to_json(*doc.fan)}};
    if (!doc.twisting.empty()) {
        Json t = Json::object();
        for (const auto& [name, e] : doc.twisting) {
            Json x = Json::object();
            if (e.region) x["region"] = *e.region;
            if (e.rays) x["rays"] = to_json(*e.rays);
            x["ell"] = to_json(e.ell);
            t[name] = x;
        }
        j["twisting"] = t;
    }
    if (!doc.kinks.empty()) {
        Json k = Json::object();
        for (const auto& [name, v] : doc.kinks) k[name] = to_json(v);
        j["kinks"] = k;
    }
    Options def;
    const Options& o = doc.options;
    Json opt = Json::object();
    if (o.search_margin != def.search_margin) opt["search_margin"] = o.search_margin;
    if (o.epsilon != def.epsilon) opt["epsilon"] = o.epsilon;
    if (o.quadrature_order != def.quadrature_order) opt["quadrature_order"] = o.quadrature_order;
    if (o.samples != def.samples) opt["samples"] = o.samples;
    if (o.seed != def.seed) opt["seed"] = o.seed;
    if (!opt.empty()) j["options"] = opt;
    return j;
}

inline std::string serialize(const InputDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline bool operator==(const SubdividedPolytope& a, const SubdividedPolytope& b)
{
    return a.points == b.points && a.triangles == b.triangles && a.nu == b.nu;
}

inline bool same_document(const InputDocument& a, const InputDocument& b) { return serialize(a) == serialize(b); }

// Parsing "-14,5,-14,-9" or "[-14, 5, -14, -9]".
inline IntVector parse_int_list(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) s += c;
    IntVector out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InputError("empty entry in list '" + text + "'");
        try {
            std::size_t k = item[0] == '-' ? 1 : 0;
            if (k == item.size()) throw std::runtime_error("sign only");
            for (; k < item.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(item[k]))) throw std::runtime_error("not a digit");
            out.push_back(Integer(item));
        } catch (const std::runtime_error&) {
            throw InputError("malformed integer '" + item + "' in list '" + text + "'");
        }
    }
    if (out.empty()) throw InputError("empty list");
    return out;
}

struct ResolvedTwisting {
    std::string label;
    SmoothCompleteFan fan;
    IntVector ell;  // fan order
    std::optional<std::size_t> region;
};

// Region names "C<i>" index the interior lattice points in lexicographic order.
inline std::size_t parse_region(const std::string& name, std::size_t count)
{
    std::string digits = !name.empty() && (name[0] == 'C' || name[0] == 'c') ? name.substr(1) : name;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InputError("unknown region '" + name + "'");
    std::size_t i = std::stoul(digits);
    if (i >= count) throw InputError("region " + name + " does not exist (" + std::to_string(count) + " bounded regions)");
    return i;
}

inline SmoothCompleteFan region_fan(const InputDocument& doc, const std::optional<std::string>& region,
                                    std::optional<std::size_t>* index = nullptr)
{
    if (region && *region == "fan") {
        if (!doc.fan) throw InputError("document has no fan");
        return make_fan(*doc.fan);
    }
    if (region || !doc.fan) {
        if (!doc.polytope) throw InputError("document has neither a polytope nor a fan");
        TropicalCurve c = tropical_curve(*doc.polytope);
        auto regions = bounded_regions(c);
        std::size_t i = 0;
        if (regions.empty()) throw InputError("the curve has no bounded region");
        if (region) i = parse_region(*region, regions.size());
        else if (regions.size() != 1) throw InputError("several bounded regions; pass --region");
        if (index) *index = i;
        return fan_of_region(c, regions[i]);
    }
    return make_fan(*doc.fan);
}

inline ResolvedTwisting resolve_twisting(const InputDocument& doc, const std::string& ell_arg,
                                         const std::optional<std::string>& region_arg)
{
    ResolvedTwisting out;
    auto named = doc.twisting.find(ell_arg);
    if (named != doc.twisting.end()) {
        const TwistingEntry& e = named->second;
        out.label = ell_arg;
        std::optional<std::string> region = region_arg ? region_arg : e.region;
        if (!region && !doc.fan && !doc.polytope && e.rays)
            out.fan = make_fan(*e.rays);
        else
            out.fan = region_fan(doc, region, &out.region);
        if (e.rays) {
            out.ell.assign(out.fan.size(), Integer(0));
            std::vector<bool> seen(out.fan.size());
            if (e.rays->size() != out.fan.size()) throw InputError("twisting '" + ell_arg + "' lists the wrong number of rays");
            for (std::size_t i = 0; i < e.rays->size(); ++i) {
                auto it = std::find(out.fan.rays.begin(), out.fan.rays.end(), (*e.rays)[i]);
                if (it == out.fan.rays.end())
                    throw InputError("twisting '" + ell_arg + "': ray " + to_string((*e.rays)[i]) + " is not in the fan");
                std::size_t j = static_cast<std::size_t>(it - out.fan.rays.begin());
                if (seen[j]) throw InputError("twisting '" + ell_arg + "' repeats a ray");
                seen[j] = true;
                out.ell[j] = e.ell[i];
            }
        } else {
            out.ell = e.ell;
        }
    } else {
        bool inline_list = !ell_arg.empty() && (ell_arg.find(',') != std::string::npos || ell_arg[0] == '[' ||
                                                ell_arg[0] == '-' || std::isdigit(static_cast<unsigned char>(ell_arg[0])));
        if (!inline_list) throw InputError("no twisting set named '" + ell_arg + "'");
        out.label = ell_arg;
        out.ell = parse_int_list(ell_arg);
        out.fan = region_fan(doc, region_arg, &out.region);
    }
    if (out.ell.size() != out.fan.size())
        throw InputError("ell has " + std::to_string(out.ell.size()) + " entries but the fan has " +
                         std::to_string(out.fan.size()) + " rays");
    return out;
}

// ---- reports ----

inline Json report_envelope(const std::string& command, const InputDocument* doc, Json result)
{
    Json j;
    j["format"] = "toricmirror-report";
    j["version"] = kReportVersion;
    j["command"] = command;
    if (doc && !doc->name.empty()) j["input"] = doc->name;
    j["result"] = std::move(result);
    return j;
}

inline Json report_validation(const ValidationReport& v)
{
    Json issues = Json::array();
    for (const auto& i : v.issues) issues.push_back({{"kind", i.kind}, {"where", i.where}, {"message", i.message}});
    return {{"ok", v.ok()}, {"issues", issues}};
}

inline Json report_tropical(const TropicalCurve& c)
{
    Json verts = Json::array();
    for (std::size_t t = 0; t < c.vertices.size(); ++t)
        verts.push_back({{"triangle", triangle_name(c.polytope, t)}, {"point", to_json(c.vertices[t])}});
    Json bounded = Json::array();
    for (const auto& e : c.bounded_edges)
        bounded.push_back({{"dual_edge", edge_name(c.polytope, c.subdivision_edges[e.subdivision_edge].a, c.subdivision_edges[e.subdivision_edge].b)},
                           {"from", e.plus_vertex},
                           {"to", e.minus_vertex},
                           {"direction", to_json(e.n_e)}});
    Json rays = Json::array();
    for (const auto& r : c.rays)
        rays.push_back({{"dual_edge", edge_name(c.polytope, c.subdivision_edges[r.subdivision_edge].a, c.subdivision_edges[r.subdivision_edge].b)},
                        {"origin", r.origin},
                        {"direction", to_json(r.direction)}});
    Json regions = Json::array();
    auto rs = bounded_regions(c);
    for (std::size_t i = 0; i < rs.size(); ++i)
        regions.push_back({{"name", "C" + std::to_string(i)},
                           {"dual_vertex", to_json(rs[i].dual_vertex)},
                           {"rays", to_json(rs[i].rays)},
                           {"vertices", rs[i].vertices}});
    return {{"vertices", verts}, {"bounded_edges", bounded}, {"rays", rays}, {"bounded_regions", regions}};
}

inline Json report_fan(const SmoothCompleteFan& f)
{
    return {{"rays", to_json(f.rays)}, {"self_intersections", to_json(self_intersections(f))}, {"K", to_json(kc_on_fan(f))}};
}

inline Json report_sphere(const SmoothCompleteFan& f, const IntVector& ell)
{
    Json j;
    j["fan"] = report_fan(f);
    j["ell"] = to_json(ell);
    auto v = validate_twisting(f, ell);
    j["valid"] = v.ok();
    j["failures"] = v.failures;
    if (!v.ok()) return j;
    auto th = theta_from_twisting(f, ell);
    j["theta"] = to_json(th.thetas);
    j["gamma"] = to_json(gamma_curve(th).vertices);
    j["convexity"] = to_string(is_strictly_convex(th));
    IntVector K = kc_on_fan(f), kappa;
    for (std::size_t i = 0; i < K.size(); ++i) kappa.push_back((K[i] - ell[i]) / 2);
    j["kappa"] = to_json(kappa);
    return j;
}

inline Json report_winding(const WindingTable& t)
{
    Json pts = Json::array();
    for (const auto& e : t.nonzero()) pts.push_back({{"m", to_json(e.m)}, {"w", e.w}});
    auto eo = h_even_odd(t);
    return {{"box", {{"x0", t.x0}, {"y0", t.y0}, {"width", t.width}, {"height", t.height}}},
            {"nonzero", pts},
            {"h_even", eo.h_even},
            {"h_odd", eo.h_odd}};
}

inline Json report_cohomology(const CohomologyDims& d) { return {{"h0", d.h0}, {"h1", d.h1}, {"h2", d.h2}}; }

inline Json report_theorem(const WindingTheoremReport& r)
{
    return {{"winding", {{"h_even", r.winding.h_even}, {"h_odd", r.winding.h_odd}}},
            {"cohomology", report_cohomology(r.cohomology)},
            {"divisor", to_json(r.divisor)},
            {"intersections", to_json(r.intersections)},
            {"comparison", std::to_string(r.winding.h_even) + "," + std::to_string(r.winding.h_odd) + " = " +
                               std::to_string(r.cohomology.h0 + r.cohomology.h2) + "," + std::to_string(r.cohomology.h1)},
            {"match", r.match}};
}

inline Json report_a2d(const A2dExample& ex, const A2dReport& r)
{
    Json regions = Json::array();
    for (const auto& g : ex.regions) {
        Json x = {{"j", g.j}, {"rays", to_json(a2d_rays(g.j))}, {"K", to_json(g.K)}, {"ell", to_json(g.ell)},
                  {"kappa", to_json(g.kappa)}};
        try {
            x["kappa_BFE"] = express_in_BFE(g.kappa, g.j).str();
        } catch (const InputError& e) {
            x["kappa_BFE"] = std::string("unavailable: ") + e.what();
        }
        regions.push_back(x);
    }
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json x = {{"pair", c.first + "," + c.second}, {"kind", to_string(c.pair.kind)}};
        if (c.pair.k) x["k"] = *c.pair.k;
        if (c.pair.m) x["m"] = *c.pair.m;
        x["ext_dims"] = c.dims;
        x["total"] = total(c.dims);
        x["expected"] = c.expected_total;
        x["ok"] = c.ok;
        checks.push_back(x);
    }
    return {{"d", ex.d}, {"objects", ex.labels()}, {"regions", regions}, {"assumptions", r.assumptions},
            {"checks", checks}, {"failures", r.failures}, {"ok", r.ok()}};
}

inline Json report_smoothing(const SmoothingReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"points", c.points}, {"max_error", c.max_error}, {"tolerance", c.tolerance},
                          {"ok", c.ok()}});
    return {{"epsilon", r.epsilon}, {"checks", checks}, {"ok", r.ok()}};
}

inline Json report_hessian(const HessianReport& r)
{
    return {{"epsilon", r.epsilon},
            {"convexity", to_string(r.convexity)},
            {"interior_samples", r.interior_samples},
            {"definite", r.definite},
            {"min_abs_eigenvalue", r.min_abs_eigenvalue},
            {"skeleton_samples", r.skeleton_samples},
            {"max_gamma_distance", r.max_gamma_distance},
            {"max_hull_excess", r.max_hull_excess},
            {"failures", r.failures},
            {"ok", r.ok()}};
}

}  // namespace toricmirror

#endif
