#include "cli_core.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "motivic/arc_oracle.hpp"
#include "motivic/covers.hpp"
#include "motivic/errors.hpp"
#include "motivic/resolution.hpp"
#include "motivic/toric.hpp"

namespace motivic::cli {
namespace {

using nlohmann::json;

/// Defect in an input document or a subcommand argument; exit code 2.
struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& msg) { throw ParseFailure(msg); }

// ---------------------------------------------------------------------------
// Input documents
// ---------------------------------------------------------------------------

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open input file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("input document must be a JSON object");
  return doc;
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

long int_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) {
    fail(std::string("field '") + key + "' must be an integer");
  }
  return v.get<long>();
}

std::string kind_of(const json& doc) {
  const json& v = field(doc, "kind");
  if (!v.is_string()) fail("field 'kind' must be a string");
  return v.get<std::string>();
}

std::vector<long> long_list(const json& v, const char* what) {
  if (!v.is_array()) fail(std::string(what) + " must be an array");
  std::vector<long> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) {
      fail(std::string(what) + " entries must be integers");
    }
    out.push_back(e.get<long>());
  }
  return out;
}

std::vector<std::vector<int>> index_sets(const json& v, const char* what) {
  if (!v.is_array()) fail(std::string(what) + " must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& e : v) {
    auto row = long_list(e, what);
    std::vector<int> set(row.begin(), row.end());
    // Documents may list a face's vertices in any order.
    std::sort(set.begin(), set.end());
    out.push_back(std::move(set));
  }
  return out;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  Integer num, den = 1;
  try {
    num = Integer(slash == std::string::npos ? s : s.substr(0, slash));
    if (slash != std::string::npos) den = Integer(s.substr(slash + 1));
  } catch (const std::exception&) {
    fail("malformed rational: " + s);
  }
  if (den == 0) fail("rational with zero denominator: " + s);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

ResolutionData resolution_from(const json& doc) {
  const std::string kind = kind_of(doc);
  if (kind == "monomial") {
    MonomialFunction f;
    f.d = int_field(doc, "d");
    f.exps = long_list(field(doc, "exps"), "'exps'");
    return induced_resolution(f);
  }
  if (kind != "resolution") fail("expected a resolution or monomial document");
  const long d = int_field(doc, "d");
  const json& comps = field(doc, "components");
  if (!comps.is_array()) fail("'components' must be an array");
  std::vector<ResolutionComponent> cs;
  for (const auto& c : comps) {
    if (!c.is_object()) fail("'components' entries must be objects");
    ResolutionComponent rc;
    const json& id = field(c, "id");
    if (!id.is_string()) fail("component 'id' must be a string");
    rc.id = id.get<std::string>();
    rc.m = int_field(c, "m");
    rc.n = int_field(c, "n");
    cs.push_back(std::move(rc));
  }
  return ResolutionData(d, std::move(cs));
}

Triangulation triangulation_from(const json& doc) {
  if (kind_of(doc) != "triangulation") fail("expected a triangulation document");
  const int n = static_cast<int>(int_field(doc, "n"));
  const json& vs = field(doc, "vertices");
  if (!vs.is_array()) fail("'vertices' must be an array");
  std::vector<std::vector<Rational>> vertices;
  for (const auto& v : vs) {
    if (!v.is_array()) fail("'vertices' entries must be arrays");
    std::vector<Rational> coords;
    for (const auto& c : v) {
      if (c.is_string()) {
        coords.push_back(parse_rational(c.get<std::string>()));
      } else if (c.is_number_integer()) {
        coords.push_back(Rational(c.get<long>()));
      } else {
        fail("vertex coordinates must be \"num/den\" strings");
      }
    }
    vertices.push_back(std::move(coords));
  }
  auto maximal = index_sets(field(doc, "maximal"), "'maximal'");
  return Triangulation(n, std::move(vertices), std::move(maximal));
}

SimplicialFan fan_from(const json& doc) {
  if (kind_of(doc) != "fan") fail("expected a fan document");
  const int dim = static_cast<int>(int_field(doc, "dim"));
  const json& rs = field(doc, "rays");
  if (!rs.is_array()) fail("'rays' must be an array");
  std::vector<std::vector<Integer>> rays;
  for (const auto& r : rs) {
    auto row = long_list(r, "'rays'");
    rays.emplace_back(row.begin(), row.end());
  }
  auto maximal = index_sets(field(doc, "maximal"), "'maximal'");
  return SimplicialFan(dim, std::move(rays), std::move(maximal));
}

covers::CoverSpec cover_from(const json& doc) {
  if (kind_of(doc) != "cover") fail("expected a cover document");
  covers::CoverSpec spec;
  spec.d = int_field(doc, "d");
  spec.p = long_list(field(doc, "p"), "'p'");
  return spec;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string int_str(const Integer& v) { return v.str(); }

std::string rat_str(const Rational& v) { return v.str(); }

std::string vec_str(const std::vector<Integer>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += int_str(v[i]);
  }
  return s + ")";
}

std::string long_vec_str(const std::vector<long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string idx_str(const std::vector<int>& c) {
  std::string s = "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

std::string bracket_row(const std::vector<Rational>& row) {
  std::string s = "[";
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) s += " ";
    s += rat_str(row[i]);
  }
  return s + "]";
}

std::string bracket_row(const std::vector<Integer>& row) {
  std::string s = "[";
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) s += " ";
    s += int_str(row[i]);
  }
  return s + "]";
}

std::string report_text(const CheckReport& r) {
  std::ostringstream os;
  os << "identity: " << r.identity << "\n";
  os << "pass: " << yn(r.pass) << "\n";
  os << "lhs: " << r.lhs << "\n";
  os << "rhs: " << r.rhs << "\n";
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  return os.str();
}

json report_json(const std::string& command, const CheckReport& r) {
  return json{{"command", command}, {"identity", r.identity},
              {"pass", r.pass},     {"lhs", r.lhs},
              {"rhs", r.rhs},       {"note", r.note}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Subcommand arguments
// ---------------------------------------------------------------------------

long parse_long(const std::string& tok) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    fail("malformed integer: " + tok);
  }
  if (pos != tok.size()) fail("malformed integer: " + tok);
  return v;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    const std::string tok =
        s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_long(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Splits "name:payload" into its two halves; the payload may be empty.
std::pair<std::string, std::string> split_sub(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return {s, ""};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

struct Options {
  std::string file;
  bool json_out = false;
  std::uint64_t seed = 20240817;
};

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

RunResult cmd_zeta(const Options& o, bool equivariant) {
  const ResolutionData data = resolution_from(load_document(o.file));
  const TRational z = equivariant ? equivariant_zeta(data) : naive_zeta(data);
  if (o.json_out) {
    return {0, dump(json{{"command", "zeta"},
                         {"mode", equivariant ? "equivariant" : "naive"},
                         {"value", z.str()}})};
  }
  return {0, z.str() + "\n"};
}

RunResult cmd_nearby(const Options& o) {
  const ResolutionData data = resolution_from(load_document(o.file));
  const GrothClass psi = nearby_fiber(data);
  if (o.json_out) {
    return {0, dump(json{{"command", "nearby"}, {"value", psi.str()}})};
  }
  return {0, psi.str() + "\n"};
}

RunResult cmd_check(const Options& o, const std::string& identity) {
  const ResolutionData data = resolution_from(load_document(o.file));
  const auto [name, payload] = split_sub(identity);
  CheckReport r;
  if (identity == "selfdual") {
    r = check_self_duality(data);
  } else if (identity == "naive-feq") {
    r = check_functional_naive(data);
  } else if (identity == "sprime-feq") {
    r = check_functional_sprime(data);
  } else if (name == "power" && !payload.empty()) {
    r = check_power_rule(data, parse_long(payload));
  } else {
    fail("unknown identity: " + identity +
         " (expected selfdual, naive-feq, sprime-feq, or power:m)");
  }
  const int code = r.pass ? 0 : 1;
  if (o.json_out) return {code, dump(report_json("check", r))};
  return {code, report_text(r)};
}

FaceVector face_vector_from(const json& doc) {
  const std::string kind = kind_of(doc);
  if (kind == "face-vector") {
    FaceVector fv;
    for (long v : long_list(field(doc, "f"), "'f'")) fv.f.push_back(v);
    return fv;
  }
  if (kind != "triangulation") {
    fail("expected a face-vector or triangulation document");
  }
  const Triangulation tri = triangulation_from(doc);
  FaceVector fv;
  fv.f.assign(tri.ambient_n() + 1, 0);
  for (const auto& face : tri.faces()) fv.f[face.size() - 1] += 1;
  return fv;
}

RunResult cmd_toric(const Options& o, const std::string& sub) {
  const json doc = load_document(o.file);
  const auto [name, payload] = split_sub(sub);
  if (name == "hpoly") {
    const Triangulation tri = triangulation_from(doc);
    tri.validate(o.seed);
    const LaurentPoly h = tri.h_poly();
    if (o.json_out) {
      return {0, dump(json{{"command", "toric"}, {"sub", "hpoly"}, {"h", h.str("t")}})};
    }
    return {0, "h = " + h.str("t") + "\n"};
  }
  if (name == "gpoly") {
    if (payload.empty()) fail("gpoly needs vertex indices, e.g. gpoly:0,2");
    const Triangulation tri = triangulation_from(doc);
    tri.validate(o.seed);
    auto raw = parse_long_list(payload);
    Triangulation::Face tau(raw.begin(), raw.end());
    std::sort(tau.begin(), tau.end());
    tau.erase(std::unique(tau.begin(), tau.end()), tau.end());
    const LaurentPoly g = tri.g_poly(tau);
    if (o.json_out) {
      return {0, dump(json{{"command", "toric"},
                           {"sub", "gpoly"},
                           {"face", tau},
                           {"g", g.str("t")}})};
    }
    return {0, "g" + idx_str(tau) + " = " + g.str("t") + "\n"};
  }
  if (name == "ds") {
    const FaceVector fv = face_vector_from(doc);
    const auto h = dehn_sommerville(fv);
    std::string joined;
    for (size_t i = 0; i < h.size(); ++i) {
      if (i) joined += ",";
      joined += int_str(h[i]);
    }
    const bool sym = is_palindromic(h);
    if (o.json_out) {
      json hs = json::array();
      for (const auto& v : h) hs.push_back(int_str(v));
      return {0, dump(json{{"command", "toric"},
                           {"sub", "ds"},
                           {"h", hs},
                           {"symmetric", sym}})};
    }
    return {0, "h = " + joined + " symmetric: " + yn(sym) + "\n"};
  }
  if (name == "ppoly") {
    const SimplicialFan fan = fan_from(doc);
    fan.validate_pairwise(o.seed);
    std::ostringstream os;
    json cones = json::array();
    for (size_t ci = 0; ci < fan.maximal_cones().size(); ++ci) {
      const auto& cone = fan.maximal_cones()[ci];
      const auto rows = fan.cone_rays(cone);
      const int k = static_cast<int>(rows.size());
      std::vector<int> all(k);
      for (int i = 0; i < k; ++i) all[i] = i;
      const SimplicialFan single(fan.dim(), rows, {all});
      const ConeRefinement ref{rows, stellar_refine(single)};
      os << "cone " << ci << ": rays";
      for (const auto& r : rows) os << " " << vec_str(r);
      os << "\n";
      json pj = json::object();
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> tau;
        for (int i = 0; i < k; ++i) {
          if (mask & (1u << i)) tau.push_back(i);
        }
        const LaurentPoly p = p_poly(ref, tau);
        const std::string label = tau.empty() ? "empty" : [&] {
          std::string s;
          for (size_t i = 0; i < tau.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(tau[i]);
          }
          return s;
        }();
        os << "p[" << label << "] = " << p.str("t") << "\n";
        pj[label] = p.str("t");
      }
      cones.push_back(json{{"cone", ci}, {"p", pj}});
    }
    if (o.json_out) {
      return {0, dump(json{{"command", "toric"}, {"sub", "ppoly"}, {"cones", cones}})};
    }
    return {0, os.str()};
  }
  if (name == "resolve") {
    const SimplicialFan fan = fan_from(doc);
    fan.validate_pairwise(o.seed);
    const SimplicialFan refined = stellar_refine(fan);
    if (o.json_out) {
      json rays = json::array();
      for (const auto& r : refined.rays()) rays.push_back(vec_str(r));
      return {0, dump(json{{"command", "toric"},
                           {"sub", "resolve"},
                           {"rays", rays},
                           {"maximal", refined.maximal_cones()}})};
    }
    std::ostringstream os;
    os << "rays:";
    for (const auto& r : refined.rays()) os << " " << vec_str(r);
    os << "\nmaximal:";
    for (const auto& c : refined.maximal_cones()) os << " " << idx_str(c);
    os << "\n";
    return {0, os.str()};
  }
  if (name == "dual") {
    const SimplicialFan fan = fan_from(doc);
    fan.validate_pairwise(o.seed);
    const CheckReport r = check_toric_duality(fan);
    const int code = r.pass ? 0 : 1;
    if (o.json_out) return {code, dump(report_json("toric", r))};
    return {code, report_text(r)};
  }
  fail("unknown toric subcommand: " + sub +
       " (expected hpoly, gpoly:i,j, ds, ppoly, resolve, or dual)");
}

RunResult cmd_cover(const Options& o, const std::string& sub) {
  const covers::CoverSpec spec = cover_from(load_document(o.file));
  const auto [name, payload] = split_sub(sub);
  if (name == "lattice") {
    const covers::LatticeModel m = covers::lattice_of_cover(spec);
    if (o.json_out) {
      return {0, dump(json{{"command", "cover"},
                           {"sub", "lattice"},
                           {"rows", m.str()},
                           {"index", rat_str(m.index_over_standard())}})};
    }
    return {0, m.str() + "\nindex: " + rat_str(m.index_over_standard()) + "\n"};
  }
  if (name == "restrict") {
    if (payload.empty()) fail("restrict needs an axis, e.g. restrict:1");
    const int axis = static_cast<int>(parse_long(payload));
    const covers::LatticeModel m =
        covers::restrict_lattice(covers::lattice_of_cover(spec), axis);
    const covers::RestrictionAction act = covers::restriction_action(spec, axis);
    if (o.json_out) {
      return {0, dump(json{{"command", "cover"},
                           {"sub", "restrict"},
                           {"axis", axis},
                           {"rows", m.str()},
                           {"d_prime", act.d_prime},
                           {"exponent", act.exponent}})};
    }
    std::ostringstream os;
    os << m.str() << "\naction: d' = " << act.d_prime
       << ", exponent = " << act.exponent << "\n";
    return {0, os.str()};
  }
  if (name == "components") {
    const covers::ComponentDecomposition cd = covers::component_decomposition(spec);
    if (o.json_out) {
      return {0, dump(json{{"command", "cover"},
                           {"sub", "components"},
                           {"c", cd.c},
                           {"e", cd.e},
                           {"reduced_d", cd.reduced.d},
                           {"reduced_p", cd.reduced.p}})};
    }
    std::ostringstream os;
    os << "c: " << cd.c << "\ne: " << cd.e << "\nreduced: d=" << cd.reduced.d
       << " p=" << long_vec_str(cd.reduced.p) << "\n";
    return {0, os.str()};
  }
  if (name == "hilbert") {
    const auto basis = covers::hilbert_basis(covers::lattice_of_cover(spec));
    if (o.json_out) {
      json rows = json::array();
      for (const auto& row : basis) rows.push_back(bracket_row(row));
      return {0, dump(json{{"command", "cover"}, {"sub", "hilbert"}, {"generators", rows}})};
    }
    std::ostringstream os;
    for (const auto& row : basis) os << bracket_row(row) << "\n";
    return {0, os.str()};
  }
  if (name == "complete") {
    if (payload.empty()) fail("complete needs a vector, e.g. complete:2,3,5");
    std::vector<Integer> alpha;
    for (long v : parse_long_list(payload)) alpha.push_back(v);
    const intmat::Matrix m = covers::unimodular_completion(alpha);
    if (o.json_out) {
      json rows = json::array();
      for (const auto& row : m) rows.push_back(bracket_row(row));
      return {0, dump(json{{"command", "cover"}, {"sub", "complete"}, {"rows", rows}})};
    }
    std::ostringstream os;
    for (const auto& row : m) os << bracket_row(row) << "\n";
    return {0, os.str()};
  }
  fail("unknown cover subcommand: " + sub +
       " (expected lattice, restrict:axis, components, hilbert, or complete:a,b)");
}

RunResult cmd_arcs(const Options& o) {
  const json doc = load_document(o.file);
  if (kind_of(doc) != "arc-task") fail("expected an arc-task document");
  MonomialFunction f;
  f.d = int_field(doc, "d");
  f.exps = long_list(field(doc, "exps"), "'exps'");
  std::vector<int> qs;
  for (long q : long_list(field(doc, "qs"), "'qs'")) qs.push_back(static_cast<int>(q));
  const long n_max = int_field(doc, "n_max");
  const auto rows = compare_zeta(f, qs, n_max);

  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.match();
  const int code = all_ok ? 0 : 1;

  if (o.json_out) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back(json{{"q", r.q},
                         {"n", r.n},
                         {"mode", r.mode == ArcMode::Ord ? "ord" : "monic"},
                         {"skipped", r.skipped},
                         {"series", int_str(r.series)},
                         {"arcs", int_str(r.arcs)},
                         {"ok", r.match()}});
    }
    return {code, dump(json{{"command", "arcs"}, {"rows", out}})};
  }

  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"q", "n", "mode", "series", "arcs", "ok"});
  for (const auto& r : rows) {
    cells.push_back({std::to_string(r.q), std::to_string(r.n),
                     r.mode == ArcMode::Ord ? "ord" : "monic",
                     r.skipped ? "-" : int_str(r.series),
                     r.skipped ? "-" : int_str(r.arcs),
                     r.skipped ? "skip" : yn(r.series == r.arcs)});
  }
  std::array<size_t, 6> width{};
  for (const auto& row : cells) {
    for (size_t i = 0; i < 6; ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t i = 0; i < 6; ++i) {
      if (i) os << "  ";
      // Numbers right-aligned, text columns left-aligned.
      const bool right = i == 0 || i == 1 || i == 3 || i == 4;
      const size_t pad = width[i] - row[i].size();
      if (right) os << std::string(pad, ' ');
      os << row[i];
      if (!right && i + 1 < 6) os << std::string(pad, ' ');
    }
    os << "\n";
  }
  return {code, os.str()};
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app("Exact zeta and nearby-fiber computations from resolution data",
               "motivic-cli");
  app.require_subcommand(1);

  Options o;
  bool naive = false, equivariant = false;
  std::string identity, toric_sub, cover_sub;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Input document (JSON)")->required();
    sub->add_flag("--json", o.json_out, "Machine-readable output");
    sub->add_option("--seed", o.seed, "Seed for randomized validation probes");
  };

  CLI::App* zeta = app.add_subcommand("zeta", "Zeta function of a resolution");
  common(zeta);
  CLI::Option* fn = zeta->add_flag("--naive", naive, "Without the group action (default)");
  zeta->add_flag("--equivariant", equivariant, "With the root-of-unity action")
      ->excludes(fn);

  common(app.add_subcommand("nearby", "Nearby fiber of a resolution"));

  CLI::App* check = app.add_subcommand("check", "Verify an identity on a resolution");
  common(check);
  check->add_option("identity", identity,
                    "selfdual | naive-feq | sprime-feq | power:m")
      ->required();

  CLI::App* toric = app.add_subcommand("toric", "Triangulation and fan computations");
  common(toric);
  toric->add_option("sub", toric_sub,
                    "hpoly | gpoly:i,j | ds | ppoly | resolve | dual")
      ->required();

  CLI::App* cover = app.add_subcommand("cover", "Cyclic-cover lattice computations");
  common(cover);
  cover->add_option("sub", cover_sub,
                    "lattice | restrict:axis | components | hilbert | complete:a,b")
      ->required();

  common(app.add_subcommand("arcs", "Compare zeta coefficients with jet counts"));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }

  try {
    if (app.got_subcommand("zeta")) return cmd_zeta(o, equivariant);
    if (app.got_subcommand("nearby")) return cmd_nearby(o);
    if (app.got_subcommand("check")) return cmd_check(o, identity);
    if (app.got_subcommand("toric")) return cmd_toric(o, toric_sub);
    if (app.got_subcommand("cover")) return cmd_cover(o, cover_sub);
    if (app.got_subcommand("arcs")) return cmd_arcs(o);
  } catch (const ParseFailure& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const BudgetExceeded& e) {
    return {3, std::string("error: ") + e.what() + "\n"};
  } catch (const RankTooLarge& e) {
    return {3, std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
  return {2, "error: no subcommand\n"};
}

}  // namespace motivic::cli
