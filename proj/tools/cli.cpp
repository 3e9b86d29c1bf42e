#include "cli.hpp"

#include "fanforge/error.hpp"
#include "fanforge/parse.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace fanforge::cli {

namespace {

[[noreturn]] void shape_error(const std::string& where, const std::string& what) {
  fail(ErrorCode::ParseError, (where.empty() ? "/" : where) + ": " + what);
}

// Errors raised by the scalar parser get the document location prepended.
Scalar parse_at(const TablePtr& table, const nlohmann::json& j, const std::string& where) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long long>());
  } else {
    shape_error(where, "expected an expression string or an integer");
  }
  try {
    return parse_scalar(table, text);
  } catch (const Error& e) {
    fail(e.code(), where + ": " + e.what());
  }
}

Rational rational_at(const nlohmann::json& j, const std::string& where) {
  static const TablePtr plain = SymbolTable::rational();
  const Scalar s = parse_at(plain, j, where);
  if (!s.is_rational()) shape_error(where, "expected a rational number");
  return s.to_rational();
}

const nlohmann::json& field(const nlohmann::json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) shape_error(where, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t count_at(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) shape_error(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

const nlohmann::json& array_at(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) shape_error(where, "expected an array");
  return j;
}

SymbolSpec parse_symbol(const nlohmann::json& j, const std::string& where) {
  SymbolSpec s;
  const auto& name = field(j, "name", where);
  if (!name.is_string()) shape_error(where + "/name", "expected a string");
  s.name = name.get<std::string>();
  if (j.contains("min_poly")) {
    univariate::Coeffs c;
    const auto& mp = array_at(j.at("min_poly"), where + "/min_poly");
    for (std::size_t i = 0; i < mp.size(); ++i) c.push_back(rational_at(mp[i], where + "/min_poly/" + std::to_string(i)));
    s.min_poly = c;
  }
  const auto& approx = field(j, "approx", where);
  const Rational num = rational_at(field(approx, "num", where + "/approx"), where + "/approx/num");
  const Rational den = rational_at(field(approx, "den", where + "/approx"), where + "/approx/den");
  if (den == 0) shape_error(where + "/approx/den", "zero denominator");
  s.approx_mid = num / den;
  s.approx_radius = rational_at(field(approx, "err", where + "/approx"), where + "/approx/err");
  if (j.contains("refiner")) {
    const auto& r = j.at("refiner");
    const std::string prefix = "sqrt-of-rational(";
    if (!r.is_string()) shape_error(where + "/refiner", "expected a string");
    const std::string text = r.get<std::string>();
    if (text.rfind(prefix, 0) != 0 || text.back() != ')') {
      shape_error(where + "/refiner", "unknown refiner \"" + text + "\"");
    }
    s.sqrt_of = rational_at(text.substr(prefix.size(), text.size() - prefix.size() - 1), where + "/refiner");
  }
  return s;
}

Vector vector_at(const TablePtr& table, const nlohmann::json& j, const std::string& where) {
  Vector v;
  array_at(j, where);
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_at(table, j[i], where + "/" + std::to_string(i)));
  return v;
}

Json str(const Scalar& x) { return x.to_string(); }

Json str(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json sets(const std::vector<IndexSet>& family) {
  Json out = Json::array();
  for (const auto& s : family) out.push_back(s);
  return out;
}

Json matrix_rows(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(str(m.row(r)));
  return out;
}

Json bosio_json(const BosioReport& r) {
  Json j;
  j["condition_i"] = r.condition_i;
  j["disjoint_pair"] = r.disjoint_pair ? Json{r.disjoint_pair->first, r.disjoint_pair->second} : Json(nullptr);
  j["condition_ii"] = r.condition_ii;
  j["failed_exchange"] = r.failed_exchange ? Json{r.failed_exchange->first, r.failed_exchange->second} : Json(nullptr);
  return j;
}

struct Pipeline {
  const Document& doc;
  VectorConfiguration normalized;
  std::optional<Triangulation> tri;
  std::optional<GaleDual> gale;

  explicit Pipeline(const Document& d) : doc(d), normalized(normalize_configuration(d.config)) {}

  const Triangulation& triangulation() {
    if (!tri) tri = validate_triangulation(normalized, doc.triangulation);
    return *tri;
  }
  const GaleDual& dual() {
    if (!gale) gale = compute_gale_dual(normalized);
    return *gale;
  }
};

Vector checked_length(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    fail(ErrorCode::DimensionMismatch,
         std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  }
  return v;
}

Json validate_section(const Document& doc) {
  auto t = validate_triangulation(doc.config, doc.triangulation);
  Json j;
  j["valid"] = true;
  j["dimension"] = doc.config.dimension();
  j["vectors"] = doc.config.size();
  j["ghosts"] = doc.config.ghost_count();
  j["normalized"] = doc.config.is_normalized();
  j["maximal_simplices"] = t.maximal().size();
  j["f_vector"] = t.f_vector();
  return j;
}

Json configuration_section(Pipeline& p) {
  const auto& v = p.normalized;
  Json j;
  j["dimension"] = v.dimension();
  j["ghosts"] = v.ghost_count();
  j["m"] = v.m();
  Json vectors = Json::array();
  for (const auto& x : v.vectors()) vectors.push_back(str(x));
  j["vectors"] = vectors;
  const auto rm = rationality_measures(v);
  j["rationality"] = {{"b", rm.b}, {"c", rm.c}, {"rational", rm.b == v.size() - v.dimension()}};
  const auto q = quasilattice_info(v);
  j["quasilattice"] = {{"generators", q.generator_count}, {"rank", q.rank}, {"is_lattice", q.is_lattice}};
  return j;
}

Json gale_section(Pipeline& p) {
  const auto& g = p.dual();
  const auto& t = p.triangulation();
  Json j;
  j["m"] = g.m();
  j["matrix"] = matrix_rows(g.matrix());
  j["valid"] = validate_gale_dual(g.matrix(), p.normalized);
  Json pts = Json::array();
  for (const auto& x : g.lambda_real_all()) pts.push_back(str(x));
  j["lambda_real"] = pts;
  j["virtual_chamber"] = sets(virtual_chamber(t).complements);
  j["bosio"] = bosio_json(bosio_conditions(t, g));
  return j;
}

Json shelling_json(const Triangulation& t, const Shelling& s) {
  Json j;
  Json order = Json::array();
  for (auto pos : s.order) order.push_back(t.maximal()[pos]);
  j["order"] = order;
  j["restrictions"] = sets(s.restrictions);
  j["indices"] = s.indices;
  return j;
}

Json strata_json(const std::vector<LeafStratum>& strata) {
  Json out = Json::array();
  for (const auto& s : strata) {
    Json row;
    row["simplex"] = s.simplex;
    row["b"] = s.b;
    row["c"] = s.c;
    row["torus_rank"] = s.torus_rank;
    row["euclidean_rank"] = s.euclidean_rank;
    row["closure_torus_rank"] = s.closure_torus_rank;
    row["is_closed"] = s.is_closed;
    out.push_back(row);
  }
  return out;
}

Json invariants_section(Pipeline& p, const InvariantReport& r) {
  const auto& t = p.triangulation();
  Json j;
  j["f_vector"] = r.f_vector;
  j["h_vector"] = r.h_vector;
  j["g_vector"] = r.g_vector;
  j["basic_betti"] = r.basic_betti;
  j["dehn_sommerville"] = r.dehn_sommerville;
  j["g_nonnegative"] = r.g_nonnegative;
  j["m_sequence"] = r.m_sequence_ok;
  j["a_invariant"] = r.a_invariant;
  j["leaf_space_class"] = leaf_space_class_name(r.leaf_space_class);
  j["shelling"] = shelling_json(t, r.shelling);
  return j;
}

Json leaves_section(const Pipeline& p, const InvariantReport& r) {
  Json j;
  j["m"] = p.normalized.m();
  j["leaf_space_class"] = leaf_space_class_name(r.leaf_space_class);
  j["a_invariant"] = r.a_invariant;
  j["strata"] = strata_json(r.strata);
  return j;
}

Json leaves_section(Pipeline& p) {
  const auto& t = p.triangulation();
  const auto strata = leaf_stratification(t, p.dual());
  const auto cls = classify_leaf_space(strata, p.normalized.m(), p.normalized.size());
  Json j;
  j["m"] = p.normalized.m();
  j["leaf_space_class"] = leaf_space_class_name(cls);
  j["a_invariant"] = a_invariant(p.normalized);
  j["closed_strata_check"] = closed_strata_lattice_check(strata, t);
  j["strata"] = strata_json(strata);
  return j;
}

// Lee point and its induced triangulation, reporting failures by error name.
Json lee_json(const GaleDual& g, const Triangulation& t, const Vector& omega) {
  Json j;
  try {
    const Vector nu = lee_point(g, omega);
    j["lee_point"] = str(nu);
    try {
      auto induced = induced_triangulation(g, nu);
      j["induced_triangulation"] = sets(induced.maximal());
      j["round_trip"] = induced.maximal() == t.maximal();
    } catch (const Error& e) {
      j["induced_triangulation"] = nullptr;
      j["error"] = std::string(e.code_name());
      j["round_trip"] = false;
    }
  } catch (const Error& e) {
    j["lee_point"] = nullptr;
    j["error"] = std::string(e.code_name());
  }
  return j;
}

Json regularity_section(Pipeline& p) {
  const auto& t = p.triangulation();
  const auto w = regularity_witness(t);
  Json j;
  j["regular"] = w.regular;
  j["witness"] = w.regular ? str(w.omega) : Json(nullptr);
  if (w.regular) j["witness_lee"] = lee_json(p.dual(), t, w.omega);
  if (p.doc.height) {
    const Vector omega = checked_length(*p.doc.height, p.normalized.size(), "height");
    Json h;
    h["omega"] = str(omega);
    h["valid"] = verify_height_function(t, omega);
    if (h["valid"].get<bool>()) h["lee"] = lee_json(p.dual(), t, omega);
    j["height"] = h;
  }
  return j;
}

Json chambers_section(Pipeline& p, const Options& opts) {
  const auto& g = p.dual();
  const auto arrangement = line_arrangement(g);
  const auto chambers = enumerate_chambers_2d(g);
  Json j;
  j["points"] = Json::array();
  for (const auto& x : arrangement.points) j["points"].push_back(str(x));
  j["lines"] = Json::array();
  for (const auto& l : arrangement.lines) j["lines"].push_back({l[0].to_string(), l[1].to_string(), l[2].to_string()});
  j["count"] = chambers.size();
  Json list = Json::array();
  for (const auto& c : chambers) {
    Json row;
    Json cycle = Json::array();
    for (const auto& v : c.vertex_cycle) cycle.push_back(str(v));
    row["vertices"] = cycle;
    row["interior_point"] = str(c.interior_point);
    row["triangulation"] = c.triangulation ? sets(*c.triangulation) : Json(nullptr);
    row["error"] = c.triangulation ? Json(nullptr) : Json(c.triangulation_error);
    list.push_back(row);
  }
  j["chambers"] = list;
  std::size_t induced = 0;
  for (const auto& c : chambers) induced += c.triangulation ? 1 : 0;
  j["with_triangulation"] = induced;
  if (opts.svg_path) {
    std::ofstream out(*opts.svg_path);
    if (!out) fail(ErrorCode::ParseError, "cannot write " + *opts.svg_path);
    out << chambers_svg(g, chambers, opts.precision);
    j["svg"] = *opts.svg_path;
  }
  return j;
}

Json embed_section(Pipeline& p, const Options& opts) {
  const auto& g = p.dual();
  Vector nu;
  if (!opts.nu.empty()) {
    for (std::size_t i = 0; i < opts.nu.size(); ++i) nu.push_back(parse_at(p.doc.table, opts.nu[i], "--nu/" + std::to_string(i)));
  } else if (p.doc.nu) {
    nu = *p.doc.nu;
  } else {
    fail(ErrorCode::ParseError, "embed needs --nu or a \"nu\" field");
  }
  nu = checked_length(nu, 2 * g.m(), "nu");
  Json j;
  j["nu"] = str(nu);
  Json coeffs = Json::array();
  for (const auto& c : lvm_embedding_coefficients(g, nu)) coeffs.push_back(str(c));
  j["coefficients"] = coeffs;
  j["positive_solution"] = embedding_has_positive_solution(g, nu);
  j["on_arrangement"] = on_arrangement(g, nu);
  try {
    j["induced_triangulation"] = sets(induced_triangulation(g, nu).maximal());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegeneratePoint && e.code() != ErrorCode::NotATriangulation) throw;
    j["induced_triangulation"] = nullptr;
    j["error"] = std::string(e.code_name());
  }
  return j;
}

Json normalize_section(Pipeline& p) {
  Document out{p.doc.table, p.doc.symbols, p.normalized, p.doc.triangulation, p.doc.height, p.doc.nu};
  return document_to_json(out);
}

std::string format_double(double x, int precision) {
  std::ostringstream s;
  s << std::setprecision(precision) << x + 0.0;
  return s.str();
}

void render_text(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const bool nested_object = v.is_object();
    const bool nested_rows = v.is_array() && !v.empty() && v.front().is_object();
    if (nested_object) {
      out << indent << it.key() << ":\n";
      render_text(v, indent + "  ", out);
    } else if (nested_rows) {
      out << indent << it.key() << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << indent << "  [" << i + 1 << "]\n";
        render_text(v[i], indent + "    ", out);
      }
    } else if (v.is_string()) {
      out << indent << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << indent << it.key() << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

Document parse_document(const nlohmann::json& j, unsigned sign_budget) {
  if (!j.is_object()) shape_error("", "document must be an object");
  const std::size_t d = count_at(field(j, "dimension", ""), "/dimension");

  std::vector<SymbolSpec> specs;
  Json symbols = Json::array();
  if (j.contains("symbols")) {
    const auto& list = array_at(j.at("symbols"), "/symbols");
    for (std::size_t i = 0; i < list.size(); ++i) specs.push_back(parse_symbol(list[i], "/symbols/" + std::to_string(i)));
    symbols = Json::parse(list.dump());
  }
  TablePtr table;
  try {
    table = specs.empty() ? SymbolTable::rational(sign_budget) : SymbolTable::create(specs, sign_budget);
  } catch (const Error& e) {
    fail(e.code(), std::string("/symbols: ") + e.what());
  }

  std::vector<Vector> vectors;
  const auto& vs = array_at(field(j, "vectors", ""), "/vectors");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "/vectors/" + std::to_string(i);
    Vector v = vector_at(table, vs[i], where);
    if (v.size() != d) shape_error(where, "expected " + std::to_string(d) + " coordinates");
    vectors.push_back(std::move(v));
  }
  const std::size_t ghosts = j.contains("ghosts") ? count_at(j.at("ghosts"), "/ghosts") : 0;
  if (ghosts > vectors.size()) shape_error("/ghosts", "more ghosts than vectors");

  std::vector<IndexSet> tri;
  const auto& ts = array_at(field(j, "triangulation", ""), "/triangulation");
  for (std::size_t a = 0; a < ts.size(); ++a) {
    const std::string where = "/triangulation/" + std::to_string(a);
    IndexSet s;
    for (std::size_t k = 0; k < array_at(ts[a], where).size(); ++k) s.push_back(count_at(ts[a][k], where + "/" + std::to_string(k)));
    tri.push_back(std::move(s));
  }

  std::optional<Vector> height;
  if (j.contains("height") && !j.at("height").is_null()) height = vector_at(table, j.at("height"), "/height");
  std::optional<Vector> nu;
  if (j.contains("nu") && !j.at("nu").is_null()) nu = vector_at(table, j.at("nu"), "/nu");

  return Document{table, symbols, VectorConfiguration(d, std::move(vectors), ghosts), std::move(tri), height, nu};
}

Document load_document(const std::string& path, unsigned sign_budget) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  return parse_document(j, sign_budget);
}

Json document_to_json(const Document& d) {
  Json j;
  j["dimension"] = d.config.dimension();
  j["symbols"] = d.symbols;
  Json vectors = Json::array();
  for (const auto& v : d.config.vectors()) vectors.push_back(str(v));
  j["vectors"] = vectors;
  j["ghosts"] = d.config.ghost_count();
  j["triangulation"] = sets(d.triangulation);
  if (d.height) j["height"] = str(*d.height);
  if (d.nu) j["nu"] = str(*d.nu);
  return j;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "normalize", "gale",     "invariants", "leaves",
                                              "regularity", "chambers", "shelling", "embed",      "all"};
  return names;
}

Json run_command(const std::string& command, const Document& doc, const Options& opts) {
  Json report;
  report["command"] = command;
  if (command == "validate") {
    report["validate"] = validate_section(doc);
    return report;
  }
  Pipeline p(doc);
  if (command == "normalize") {
    report["document"] = normalize_section(p);
  } else if (command == "gale") {
    report["configuration"] = configuration_section(p);
    report["gale"] = gale_section(p);
  } else if (command == "invariants") {
    const auto r = compute_invariants(p.triangulation(), p.dual());
    report["invariants"] = invariants_section(p, r);
  } else if (command == "leaves") {
    report["leaves"] = leaves_section(p);
  } else if (command == "regularity") {
    report["regularity"] = regularity_section(p);
  } else if (command == "chambers") {
    if (p.normalized.m() != 1) {
      fail(ErrorCode::DimensionUnsupported, "chambers are enumerated only when 2m = 2; here m = " + std::to_string(p.normalized.m()));
    }
    report["chambers"] = chambers_section(p, opts);
  } else if (command == "shelling") {
    const auto& t = p.triangulation();
    std::optional<Vector> omega;
    if (doc.height) omega = checked_length(*doc.height, p.normalized.size(), "height");
    const auto s = find_shelling(t, omega);
    Json j = shelling_json(t, s);
    j["h_vector"] = h_vector_from_shelling(s, t.dimension());
    j["source"] = omega ? "height" : "search";
    report["shelling"] = j;
  } else if (command == "embed") {
    report["embed"] = embed_section(p, opts);
  } else if (command == "all") {
    report["validate"] = validate_section(doc);
    report["configuration"] = configuration_section(p);
    report["gale"] = gale_section(p);
    const auto r = compute_invariants(p.triangulation(), p.dual());
    report["invariants"] = invariants_section(p, r);
    Json leaves = leaves_section(p, r);
    leaves["closed_strata_check"] = closed_strata_lattice_check(r.strata, p.triangulation());
    report["leaves"] = leaves;
    report["regularity"] = regularity_section(p);
    if (p.normalized.m() == 1) report["chambers"] = chambers_section(p, opts);
    if (!opts.nu.empty() || doc.nu) report["embed"] = embed_section(p, opts);
  } else {
    fail(ErrorCode::ParseError, "unknown command \"" + command + "\"");
  }
  return report;
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream out;
  render_text(report, "", out);
  return out.str();
}

unsigned sign_budget_from_env() {
  const char* env = std::getenv("FANFORGE_SIGN_BUDGET");
  if (!env || !*env) return kDefaultSignBudget;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v > 4096) fail(ErrorCode::ParseError, "FANFORGE_SIGN_BUDGET must be an integer in [0, 4096]");
  return static_cast<unsigned>(v);
}

Outcome execute(const std::string& command, const std::string& path, const Options& opts) {
  Outcome o;
  try {
    const Document doc = load_document(path, sign_budget_from_env());
    o.output = render(run_command(command, doc, opts), opts.format);
  } catch (const Error& e) {
    const bool parse = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownSymbol;
    o.exit_code = parse ? 1 : 2;
    Json j;
    j["command"] = command;
    j["error"] = std::string(e.code_name());
    j["message"] = e.what();
    o.output = render(j, opts.format);
  }
  return o;
}

std::string chambers_svg(const GaleDual& g, const std::vector<Chamber2D>& chambers, int precision) {
  const auto arrangement = line_arrangement(g);
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  auto extend = [&](const Vector& v) {
    const double x = approximate(v[0]), y = approximate(v[1]);
    if (first) {
      lo_x = hi_x = x;
      lo_y = hi_y = y;
      first = false;
    }
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  };
  for (const auto& pnt : arrangement.points) extend(pnt);
  for (const auto& c : chambers) {
    for (const auto& v : c.vertex_cycle) extend(v);
  }
  const double pad = 0.1 * std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  lo_x -= pad, hi_x += pad, lo_y -= pad, hi_y += pad;
  auto num = [&](double x) { return format_double(x, precision); };

  std::ostringstream out;
  // y is flipped so that the picture has the usual orientation.
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(lo_x) << " " << num(-hi_y) << " "
      << num(hi_x - lo_x) << " " << num(hi_y - lo_y) << "\">\n";
  const double stroke = 0.004 * std::max(hi_x - lo_x, hi_y - lo_y);
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    out << "  <polygon fill=\"" << (chambers[i].triangulation ? "#9ecae1" : "#dddddd") << "\" stroke=\"none\" points=\"";
    for (std::size_t k = 0; k < chambers[i].vertex_cycle.size(); ++k) {
      const auto& v = chambers[i].vertex_cycle[k];
      out << (k ? " " : "") << num(approximate(v[0])) << "," << num(-approximate(v[1]));
    }
    out << "\"/>\n";
  }
  for (const auto& l : arrangement.lines) {
    const double a = approximate(l[0]), b = approximate(l[1]), c = approximate(l[2]);
    double x1, y1, x2, y2;
    if (std::abs(b) > std::abs(a)) {
      x1 = lo_x, x2 = hi_x;
      y1 = (c - a * x1) / b, y2 = (c - a * x2) / b;
    } else {
      y1 = lo_y, y2 = hi_y;
      x1 = (c - b * y1) / a, x2 = (c - b * y2) / a;
    }
    out << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(-y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(-y2)
        << "\" stroke=\"#555555\" stroke-width=\"" << num(stroke) << "\"/>\n";
  }
  for (const auto& pnt : arrangement.points) {
    out << "  <circle cx=\"" << num(approximate(pnt[0])) << "\" cy=\"" << num(-approximate(pnt[1])) << "\" r=\""
        << num(3 * stroke) << "\" fill=\"#000000\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fanforge::cli
