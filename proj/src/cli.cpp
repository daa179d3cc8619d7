#include "toric/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "toric/cohomology.hpp"
#include "toric/errors.hpp"
#include "toric/intersection.hpp"
#include "toric/polyhedral.hpp"
#include "toric/triangulation.hpp"

namespace toric::cli {

using Json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kCommands = {
    "construct",       "properties", "hilbert-basis", "toric-ideal",    "sr-ideal",
    "irrelevant-ideal", "linear-relations", "chow-ring", "intersection-form", "degree",
    "cohomology",      "vanishing-sets", "print-constraints", "triangulate"};

const std::set<std::string> kCommandFields = {"command", "params"};
const std::set<std::string> kParamFields = {"class", "i", "m", "expr", "index", "only"};

// ---------------------------------------------------------------------------
// JSON <-> exact numbers

Integer integer_from(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ValidationError(what + ": not an integer");
    return x;
  }
  throw ValidationError(what + ": expected an integer");
}

long small_from(const Json& j, const std::string& what) {
  Integer x = integer_from(j, what);
  if (!x.fits_slong_p()) throw ValidationError(what + ": out of range");
  return x.get_si();
}

IntVector vector_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + ": expected an array");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from(x, what));
  return v;
}

std::vector<IntVector> vectors_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + ": expected an array of arrays");
  std::vector<IntVector> out;
  for (const auto& x : j) out.push_back(vector_from(x, what));
  return out;
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

std::string rat_string(const Rational& q) { return q.get_str(); }

void check_fields(const Json& doc, const std::set<std::string>& allowed, const std::string& what) {
  if (!doc.is_object()) throw ValidationError(what + ": expected an object");
  for (const auto& [k, _] : doc.items())
    if (!allowed.count(k)) throw ValidationError(what + ": unknown field '" + k + "'");
}

// ---------------------------------------------------------------------------
// Documents

enum class Form { constructor, fan, cone, product, points };

Form form_of(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("input document must be a JSON object");
  if (doc.contains("name")) return Form::constructor;
  if (doc.contains("cone")) return Form::cone;
  if (doc.contains("product")) return Form::product;
  if (doc.contains("points")) return Form::points;
  if (doc.contains("rays") || doc.contains("max_cones") || doc.contains("rank")) return Form::fan;
  throw ValidationError("input document has no variety: expected name, rays, cone, product or points");
}

std::set<std::string> with_command_fields(std::set<std::string> s, bool top) {
  if (top) s.insert(kCommandFields.begin(), kCommandFields.end());
  return s;
}

NormalToricVariety constructor_variety(const Json& doc, bool top) {
  check_fields(doc, with_command_fields({"name", "n", "k", "r", "q"}, top), "constructor");
  if (!doc["name"].is_string()) throw ValidationError("constructor: name must be a string");
  const std::string name = doc["name"].get<std::string>();
  auto need = [&](const char* key) {
    if (!doc.contains(key)) throw ValidationError(name + " needs parameter '" + key + "'");
    return small_from(doc[key], key);
  };
  auto only = [&](std::set<std::string> keys) {
    keys.insert("name");
    for (const auto& [k, _] : doc.items())
      if (!keys.count(k) && !kCommandFields.count(k)) throw ValidationError(name + " does not take '" + k + "'");
  };
  if (name == "projective_space") {
    only({"n"});
    long n = need("n");
    if (n < 1) throw ValidationError("projective_space needs n >= 1");
    return projective_space(static_cast<std::size_t>(n));
  }
  if (name == "hirzebruch_surface") {
    only({"r"});
    return hirzebruch_surface(need("r"));
  }
  if (name == "del_pezzo_surface") {
    only({"k"});
    long k = need("k");
    if (k < 1 || k > 3) throw ValidationError("del_pezzo_surface needs k in 1..3");
    return del_pezzo_surface(static_cast<int>(k));
  }
  if (name == "cyclic_quotient_singularity") {
    only({"n", "q"});
    return cyclic_quotient_singularity(need("n"), need("q"));
  }
  throw ValidationError("unknown constructor '" + name + "'");
}

NormalToricVariety fan_variety(const Json& doc, bool top) {
  check_fields(doc, with_command_fields({"rank", "rays", "max_cones", "names", "grading"}, top), "fan");
  if (!doc.contains("rays")) throw ValidationError("fan: missing 'rays'");
  std::vector<IntVector> rays = vectors_from(doc["rays"], "rays");
  std::size_t rank;
  if (doc.contains("rank")) {
    long r = small_from(doc["rank"], "rank");
    if (r < 0) throw ValidationError("rank must be non-negative");
    rank = static_cast<std::size_t>(r);
  } else if (!rays.empty()) {
    rank = rays.front().size();
  } else {
    throw ValidationError("fan: give 'rank' when there are no rays");
  }
  if (!doc.contains("max_cones")) throw ValidationError("fan: missing 'max_cones'");
  if (!doc["max_cones"].is_array()) throw ValidationError("max_cones: expected an array of arrays");
  std::vector<IndexSet> cones;
  for (const auto& c : doc["max_cones"]) {
    if (!c.is_array()) throw ValidationError("max_cones: expected an array of arrays");
    IndexSet s;
    for (const auto& i : c) {
      long x = small_from(i, "max_cones");
      if (x < 1 || static_cast<std::size_t>(x) > rays.size())
        throw ValidationError("max_cones: index " + std::to_string(x) + " out of range (indices are 1-based)");
      s.push_back(static_cast<std::size_t>(x - 1));
    }
    cones.push_back(s);
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    if (!doc["names"].is_array()) throw ValidationError("names: expected an array of strings");
    for (const auto& n : doc["names"]) {
      if (!n.is_string()) throw ValidationError("names: expected an array of strings");
      names.push_back(n.get<std::string>());
    }
  }
  std::optional<IntMatrix> grading;
  if (doc.contains("grading")) {
    auto rows = vectors_from(doc["grading"], "grading");
    IntMatrix g(rows.size(), rays.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rays.size()) throw ValidationError("grading: each row needs one entry per ray");
      for (std::size_t j = 0; j < rays.size(); ++j) g(i, j) = rows[i][j];
    }
    grading = g;
  }
  return NormalToricVariety::from_fan(rank, rays, cones, names, grading);
}

NormalToricVariety variety_of(const Json& doc, bool top);

NormalToricVariety cone_variety(const Json& doc, bool top) {
  check_fields(doc, with_command_fields({"cone"}, top), "cone document");
  check_fields(doc["cone"], {"rays"}, "cone");
  if (!doc["cone"].contains("rays")) throw ValidationError("cone: missing 'rays'");
  auto rays = vectors_from(doc["cone"]["rays"], "cone rays");
  if (rays.empty()) throw ValidationError("cone: needs at least one ray");
  for (const auto& r : rays)
    if (r.size() != rays.front().size()) throw ValidationError("cone: rays have different lengths");
  return affine_normal_toric_variety(positive_hull(rays));
}

NormalToricVariety product_variety(const Json& doc, bool top) {
  check_fields(doc, with_command_fields({"product"}, top), "product");
  const Json& factors = doc["product"];
  if (!factors.is_array() || factors.size() < 2) throw ValidationError("product: needs a list of at least two factors");
  NormalToricVariety v = variety_of(factors[0], false);
  for (std::size_t i = 1; i < factors.size(); ++i) v = product(v, variety_of(factors[i], false));
  return v;
}

NormalToricVariety variety_of(const Json& doc, bool top) {
  switch (form_of(doc)) {
    case Form::constructor:
      return constructor_variety(doc, top);
    case Form::fan:
      return fan_variety(doc, top);
    case Form::cone:
      return cone_variety(doc, top);
    case Form::product:
      return product_variety(doc, top);
    case Form::points:
      throw ValidationError("a point configuration is not a variety here");
  }
  throw ValidationError("unreachable");
}

PointConfiguration points_of(const Json& doc) {
  check_fields(doc, with_command_fields({"points"}, true), "point configuration");
  auto pts = vectors_from(doc["points"], "points");
  return PointConfiguration::from_points(pts);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Json fan_json(const NormalToricVariety& v) {
  Json j;
  j["rank"] = v.rank();
  j["rays"] = to_json(v.rays());
  Json cones = Json::array();
  for (const auto& c : v.max_cones()) {
    Json a = Json::array();
    for (auto i : c) a.push_back(i + 1);
    cones.push_back(a);
  }
  j["max_cones"] = cones;
  j["names"] = v.names();
  Json g = Json::array();
  for (std::size_t i = 0; i < v.grading().rows(); ++i) g.push_back(to_json(v.grading().row(i)));
  j["grading"] = g;
  return j;
}

// ---------------------------------------------------------------------------
// Options and output

struct Options {
  std::string command;
  std::string format = "json";
  std::string input;
  std::string name;
  std::optional<long> n, k, r, q;
  std::optional<std::string> klass, expr, only;
  std::optional<long> i, m, index;
};

struct Output {
  Json json;
  std::string text;
};

std::string names_of(const NormalToricVariety& v, const IndexSet& s) {
  std::string out;
  for (std::size_t a = 0; a < s.size(); ++a) out += (a ? ", " : "") + v.names()[s[a]];
  return out;
}

Json names_json(const NormalToricVariety& v, const IndexSet& s) {
  Json a = Json::array();
  for (auto i : s) a.push_back(v.names()[i]);
  return a;
}

Output ideal_output(const NormalToricVariety& v, const PolyIdeal& ideal) {
  Output o;
  o.json["variables"] = v.names();
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  o.json["generators"] = gens;
  o.text = ideal.to_string() + "\n";
  return o;
}

std::string join_vectors(const std::vector<IntVector>& vs) {
  std::string s;
  for (std::size_t a = 0; a < vs.size(); ++a) s += (a ? ", " : "") + to_string(vs[a]);
  return s;
}

ToricDivisorClass class_param(const Options& opt, const NormalToricVariety& v) {
  if (!opt.klass) throw ValidationError("--class is required, e.g. --class [0,0]");
  IntVector c = vector_from(parse_json(*opt.klass), "class");
  if (c.size() != v.class_group_rank())
    throw ValidationError("class needs " + std::to_string(v.class_group_rank()) + " coordinates");
  return {c};
}

Json constraints_json(const Polyhedron& p) {
  Json a = Json::array();
  std::istringstream is(print_constraints(p));
  for (std::string line; std::getline(is, line);) a.push_back(line);
  return a;
}

Output cmd_construct(const NormalToricVariety& v) {
  Output o;
  o.json = fan_json(v);
  if (!v.warnings().empty()) o.json["warnings"] = v.warnings();
  std::ostringstream os;
  os << "Normal toric variety of dimension " << v.dim() << " with " << v.num_rays() << " rays\n";
  os << "rays: " << join_vectors(v.rays()) << "\n";
  os << "max_cones:";
  for (const auto& c : v.max_cones()) os << " {" << names_of(v, c) << "}";
  os << "\nnames: " << names_of(v, [&] {
    IndexSet all(v.num_rays());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }()) << "\n";
  o.text = os.str();
  return o;
}

Output cmd_properties(const NormalToricVariety& v) {
  Output o;
  o.json["affine"] = v.is_affine();
  o.json["complete"] = is_complete(v);
  o.json["dim"] = v.dim();
  o.json["projective"] = is_projective(v);
  o.json["simplicial"] = is_simplicial(v);
  o.json["smooth"] = is_smooth(v);
  if (v.is_affine()) o.json["cone_dim"] = cone_dim(v.cones().front());
  o.json["class_group_rank"] = v.class_group_rank();
  Json t = Json::array();
  for (const auto& x : v.torsion()) t.push_back(to_json(x));
  o.json["torsion"] = t;
  return o;
}

const Cone& affine_cone(const NormalToricVariety& v) {
  if (!v.is_affine()) throw ValidationError("command needs an affine variety or a cone");
  return v.cones().front();
}

Output cmd_hilbert_basis(const NormalToricVariety& v) {
  auto hb = hilbert_basis(affine_cone(v));
  Output o;
  o.json["hilbert_basis"] = to_json(hb);
  for (const auto& h : hb) o.text += to_string(h) + "\n";
  return o;
}

Output cmd_toric_ideal(const NormalToricVariety& v) {
  ToricIdealResult t = toric_ideal(v);
  Output o = ideal_output(v, t.ideal);
  o.json["variables"] = t.ideal.ring()->names;
  o.json["dual_generators"] = to_json(t.generators);
  return o;
}

Output cmd_chow_ring(const NormalToricVariety& v) {
  ChowRingPtr c = chow_ring(v);
  Output o = ideal_output(v, c->ideal());
  o.text = c->to_string() + "\n";
  return o;
}

Output cmd_intersection_form(const NormalToricVariety& v) {
  Output o;
  o.json = Json::object();
  for (const auto& [mono, value] : intersection_form(chow_ring(v))) {
    o.json[mono.to_string()] = rat_string(value);
    o.text += mono.to_string() + " => " + rat_string(value) + "\n";
  }
  return o;
}

Output cmd_degree(const NormalToricVariety& v, const Options& opt) {
  if (!opt.expr) throw ValidationError("--expr is required, e.g. --expr \"x1*e1\"");
  ChowRingPtr c = chow_ring(v);
  RationalEquivalenceClass a = rational_equivalence_class(c, *opt.expr);
  Output o;
  o.json["class"] = a.to_string();
  o.json["representative"] = a.representative().to_string();
  o.json["grade"] = a.grade();
  o.text = a.to_string() + "\n";
  if (a.is_zero() || static_cast<std::size_t>(a.grade()) == v.dim()) {
    if (!is_complete(v)) {
      o.json["degree"] = nullptr;
    } else {
      Rational d = a.is_zero() ? Rational(0) : degree(a);
      o.json["degree"] = rat_string(d);
      o.text += "degree: " + rat_string(d) + "\n";
    }
  } else {
    o.json["degree"] = nullptr;
  }
  return o;
}

Output cmd_cohomology(const NormalToricVariety& v, const Options& opt) {
  ToricDivisorClass d = class_param(opt, v);
  Output o;
  o.json["class"] = to_json(d.coords);
  if (opt.i) {
    if (*opt.i < 0 || static_cast<std::size_t>(*opt.i) > v.dim())
      throw ValidationError("--i must lie in 0.." + std::to_string(v.dim()));
    Integer h = cohomology_dim(v, d, static_cast<int>(*opt.i));
    o.json["i"] = *opt.i;
    o.json["dim"] = to_json(h);
    o.text = h.get_str() + "\n";
    return o;
  }
  auto dims = cohomology_dims(v, d);
  o.json["dims"] = to_json(dims);
  for (std::size_t i = 0; i < dims.size(); ++i) o.text += "h^" + std::to_string(i) + " = " + dims[i].get_str() + "\n";
  return o;
}

Json polyhedron_json(const NormalToricVariety& v, const VanishingPolyhedron& p, std::size_t m) {
  Json j;
  j["m"] = m;
  j["rays"] = names_json(v, p.rays);
  j["multiplicity"] = to_json(p.multiplicity);
  j["apex"] = to_json(p.apex);
  j["generators"] = to_json(p.generators);
  j["constraints"] = constraints_json(p.polyhedron);
  return j;
}

Output cmd_vanishing_sets(const NormalToricVariety& v) {
  Output o;
  o.json = Json::array();
  std::ostringstream os;
  for (const auto& vs : vanishing_sets(v)) {
    Json entry;
    entry["index"] = vs.index;
    Json ps = Json::array();
    os << "V^" << vs.index << ": " << vs.polyhedra.size() << (vs.polyhedra.size() == 1 ? " polyhedron\n" : " polyhedra\n");
    for (std::size_t m = 0; m < vs.polyhedra.size(); ++m) {
      const auto& p = vs.polyhedra[m];
      ps.push_back(polyhedron_json(v, p, m + 1));
      os << "  P^" << vs.index << "_(" << m + 1 << ") = " << to_string(p.apex) << " + Cone(" << join_vectors(p.generators)
         << ") from {" << names_of(v, p.rays) << "}\n";
    }
    entry["polyhedra"] = ps;
    o.json.push_back(entry);
  }
  o.text = os.str();
  return o;
}

Output cmd_print_constraints(const NormalToricVariety& v, const Options& opt) {
  if (!opt.i) throw ValidationError("--i is required");
  auto sets = vanishing_sets(v);
  if (*opt.i < 0 || static_cast<std::size_t>(*opt.i) >= sets.size())
    throw ValidationError("--i must lie in 0.." + std::to_string(sets.size() - 1));
  const VanishingSet& vs = sets[static_cast<std::size_t>(*opt.i)];
  std::size_t lo = 0, hi = vs.polyhedra.size();
  if (opt.m) {
    if (*opt.m < 1 || static_cast<std::size_t>(*opt.m) > vs.polyhedra.size())
      throw ValidationError("--m must lie in 1.." + std::to_string(vs.polyhedra.size()));
    lo = static_cast<std::size_t>(*opt.m) - 1;
    hi = lo + 1;
  }
  Output o;
  o.json["index"] = *opt.i;
  Json ps = Json::array();
  for (std::size_t m = lo; m < hi; ++m) {
    Json p;
    p["m"] = m + 1;
    p["constraints"] = constraints_json(vs.polyhedra[m].polyhedron);
    ps.push_back(p);
    if (m > lo) o.text += "\n";
    o.text += print_constraints(vs.polyhedra[m].polyhedron);
  }
  o.json["polyhedra"] = ps;
  return o;
}

Output cmd_triangulate(const PointConfiguration& p) {
  Output o;
  o.json["points"] = to_json(p.points());
  auto ts = frst_enumerate(p);
  auto vs = varieties_from_star_triangulations(p);
  o.json["count"] = ts.size();
  Json arr = Json::array();
  std::ostringstream os;
  os << ts.size() << "\n";
  for (std::size_t t = 0; t < ts.size(); ++t) {
    Json j;
    Json simplices = Json::array();
    for (const auto& s : ts[t].simplices) {
      Json a = Json::array();
      for (auto i : s) a.push_back(i + 1);
      simplices.push_back(a);
    }
    j["simplices"] = simplices;
    Json h = Json::array();
    for (const auto& x : ts[t].heights) h.push_back(rat_string(x));
    j["heights"] = h;
    j["fan"] = fan_json(vs[t]);
    arr.push_back(j);
    os << t + 1 << ":";
    for (const auto& s : ts[t].simplices) {
      os << " [";
      for (std::size_t a = 0; a < s.size(); ++a) os << (a ? ", " : "") << s[a] + 1;
      os << "]";
    }
    os << "\n";
  }
  o.json["triangulations"] = arr;
  o.text = os.str();
  return o;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_document(const Options& opt, std::istream& in) {
  if (!opt.input.empty()) {
    if (opt.input == "-") return parse_json(read_all(in));
    std::ifstream f(opt.input);
    if (!f) throw ValidationError("cannot open input file '" + opt.input + "'");
    return parse_json(read_all(f));
  }
  if (!opt.name.empty()) {
    Json doc;
    doc["name"] = opt.name;
    if (opt.n) doc["n"] = *opt.n;
    if (opt.k) doc["k"] = *opt.k;
    if (opt.r) doc["r"] = *opt.r;
    if (opt.q) doc["q"] = *opt.q;
    return doc;
  }
  throw ValidationError("no input: use --input <file|-> or --name <constructor>");
}

// Document parameters fill in whatever the flags left unset.
void merge_params(Options& opt, Json& doc) {
  if (!doc.is_object()) return;
  if (doc.contains("command")) {
    if (!doc["command"].is_string()) throw ValidationError("command must be a string");
    if (opt.command.empty()) opt.command = doc["command"].get<std::string>();
  }
  if (doc.contains("params")) {
    const Json& p = doc["params"];
    check_fields(p, kParamFields, "params");
    auto text = [&](const char* key, std::optional<std::string>& dst) {
      if (!p.contains(key) || dst) return;
      dst = p[key].is_string() ? p[key].get<std::string>() : p[key].dump();
    };
    auto num = [&](const char* key, std::optional<long>& dst) {
      if (p.contains(key) && !dst) dst = small_from(p[key], key);
    };
    text("class", opt.klass);
    text("expr", opt.expr);
    text("only", opt.only);
    num("i", opt.i);
    num("m", opt.m);
    num("index", opt.index);
  }
}

Output dispatch(const Options& opt, const Json& doc) {
  const std::string& c = opt.command;
  if (std::find(kCommands.begin(), kCommands.end(), c) == kCommands.end())
    throw ValidationError("unknown command '" + c + "'");
  if (c == "triangulate") {
    if (form_of(doc) != Form::points) throw ValidationError("triangulate needs a {\"points\": ...} document");
    return cmd_triangulate(points_of(doc));
  }
  NormalToricVariety v = [&] {
    if (form_of(doc) != Form::points) return variety_of(doc, true);
    PointConfiguration p = points_of(doc);
    auto vs = varieties_from_star_triangulations(p);
    long idx = opt.index.value_or(1);
    if (vs.empty()) throw ValidationError("point configuration has no fine regular star triangulation");
    if (idx < 1 || static_cast<std::size_t>(idx) > vs.size())
      throw ValidationError("--index must lie in 1.." + std::to_string(vs.size()));
    return vs[static_cast<std::size_t>(idx - 1)];
  }();
  if (c == "construct") return cmd_construct(v);
  if (c == "properties") return cmd_properties(v);
  if (c == "hilbert-basis") return cmd_hilbert_basis(v);
  if (c == "toric-ideal") return cmd_toric_ideal(v);
  if (c == "sr-ideal") return ideal_output(v, stanley_reisner_ideal(v));
  if (c == "irrelevant-ideal") return ideal_output(v, irrelevant_ideal(v));
  if (c == "linear-relations") return ideal_output(v, ideal_of_linear_relations(v));
  if (c == "chow-ring") return cmd_chow_ring(v);
  if (c == "intersection-form") return cmd_intersection_form(v);
  if (c == "degree") return cmd_degree(v, opt);
  if (c == "cohomology") return cmd_cohomology(v, opt);
  if (c == "vanishing-sets") return cmd_vanishing_sets(v);
  return cmd_print_constraints(v, opt);
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  Json e;
  e["error"] = kind;
  e["message"] = message;
  err << e.dump() << "\n";
}

}  // namespace

std::string fan_to_json(const NormalToricVariety& v) { return fan_json(v).dump(); }

NormalToricVariety variety_from_json(const std::string& text) { return variety_of(parse_json(text), true); }

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact toric geometry computations", "toric"};
  app.add_option("command", opt.command, "One of: construct, properties, hilbert-basis, toric-ideal, sr-ideal, "
                                         "irrelevant-ideal, linear-relations, chow-ring, intersection-form, degree, "
                                         "cohomology, vanishing-sets, print-constraints, triangulate");
  app.add_option("--format", opt.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--input", opt.input, "JSON document file, or - for stdin");
  app.add_option("--name", opt.name, "Named constructor");
  app.add_option("--n", opt.n, "projective_space dimension, or cyclic quotient order");
  app.add_option("--k", opt.k, "del_pezzo_surface blowups (1..3)");
  app.add_option("--r", opt.r, "hirzebruch_surface twist");
  app.add_option("--q", opt.q, "cyclic quotient weight");
  app.add_option("--class", opt.klass, "Divisor class as a JSON array");
  app.add_option("--i", opt.i, "Cohomology index");
  app.add_option("--m", opt.m, "Polyhedron number within a vanishing set (1-based)");
  app.add_option("--expr", opt.expr, "Polynomial in the ray variables");
  app.add_option("--index", opt.index, "Triangulation to use for a point configuration (1-based)");
  app.add_option("--only", opt.only, "Print a single field of the result");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return 2;
  }

  try {
    Json doc = load_document(opt, in);
    merge_params(opt, doc);
    if (opt.command.empty()) throw ValidationError("no command given");
    Output result = dispatch(opt, doc);
    if (opt.only) {
      if (!result.json.is_object() || !result.json.contains(*opt.only))
        throw ValidationError("--only: result has no field '" + *opt.only + "'");
      const Json& field = result.json[*opt.only];
      if (opt.format == "text" && !field.is_structured())
        out << scalar_text(field) << "\n";
      else
        out << field.dump() << "\n";
      return 0;
    }
    if (opt.format == "text") {
      if (result.text.empty())
        for (const auto& [k, val] : result.json.items()) out << k << ": " << scalar_text(val) << "\n";
      else
        out << result.text;
    } else {
      out << result.json.dump(2) << "\n";
    }
    return 0;
  } catch (const ValidationError& e) {
    write_error(err, "validation", e.what());
    return 2;
  } catch (const UnsupportedInput& e) {
    write_error(err, "unsupported", e.what());
    return 3;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what());
    return 1;
  }
}

}  // namespace toric::cli
