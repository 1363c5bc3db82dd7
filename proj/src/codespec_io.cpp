#include "qtbound/codespec_io.hpp"

#include <fstream>
#include <sstream>

namespace qtbound {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

std::int64_t as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<std::int64_t>();
}

// Element of F_q: an integer for prime q, else a coordinate list over F_p.
Elem parse_elem(const json& j, const FiniteField& F, const std::string& field, bool allow_bare) {
  const std::uint32_t p = F.characteristic();
  if (j.is_number_integer() && (allow_bare || F.is_prime_field())) {
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v >= static_cast<std::int64_t>(p)) fail(field, "coefficient out of range [0, p)");
    return Elem{static_cast<std::uint32_t>(v)};
  }
  if (!j.is_array()) fail(field, F.is_prime_field() ? "expected an integer" : "expected a coefficient list");
  if (j.size() != static_cast<std::size_t>(F.degree())) {
    fail(field, "expected " + std::to_string(F.degree()) + " coordinates");
  }
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto v = as_int(j[i], field + "[" + std::to_string(i) + "]");
    if (v < 0 || v >= static_cast<std::int64_t>(p)) fail(field, "coefficient out of range [0, p)");
    c.push_back(static_cast<std::uint32_t>(v));
  }
  return F.from_coords(c);
}

FiniteField field_of_order(std::int64_t q) {
  if (q < 2) fail("q", "must be a prime power >= 2");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) fail("q", "not a prime power");
  try {
    return FiniteField::with_degree(static_cast<std::uint32_t>(p), e);
  } catch (const Error& ex) {
    fail("q", ex.what());
  }
}

json elem_to_json(const FiniteField& F, Elem a) {
  if (F.is_prime_field()) return a.v;
  json out = json::array();
  for (auto c : F.coords(a)) out.push_back(c);
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().format(m(i, j)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

QTCodeSpec parse_code_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("code spec must be a JSON object");
  for (const char* key : {"q", "m", "ell", "lambda", "generators"})
    if (!doc.contains(key)) fail(key, "missing");

  QTCodeSpec spec;
  spec.q_field = field_of_order(as_int(doc["q"], "q"));
  const auto m = as_int(doc["m"], "m");
  const auto ell = as_int(doc["ell"], "ell");
  if (m < 1 || m > 63) fail("m", "must be in [1, 63]");
  if (ell < 1 || ell > 64) fail("ell", "must be in [1, 64]");
  spec.m = static_cast<int>(m);
  spec.ell = static_cast<int>(ell);
  spec.lambda = parse_elem(doc["lambda"], spec.q_field, "lambda", false);
  if (spec.lambda.v == 0) fail("lambda", "must be nonzero");

  const json& gens = doc["generators"];
  if (!gens.is_array()) fail("generators", "expected an array of rows");
  for (std::size_t b = 0; b < gens.size(); ++b) {
    const std::string rf = "generators[" + std::to_string(b) + "]";
    if (!gens[b].is_array() || gens[b].size() != static_cast<std::size_t>(ell)) {
      fail(rf, "expected " + std::to_string(ell) + " polynomials");
    }
    PolyRow row;
    for (std::size_t j = 0; j < gens[b].size(); ++j) {
      const std::string pf = rf + "[" + std::to_string(j) + "]";
      const json& poly = gens[b][j];
      if (!poly.is_array() || poly.size() != static_cast<std::size_t>(m)) {
        fail(pf, "expected " + std::to_string(m) + " coefficients");
      }
      std::vector<Elem> c;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        c.push_back(parse_elem(poly[i], spec.q_field, pf + "[" + std::to_string(i) + "]", false));
      }
      row.emplace_back(spec.q_field, std::move(c));
    }
    spec.generators.push_back(std::move(row));
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return spec;
}

QTCodeSpec load_code_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_code_spec(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json code_spec_to_json(const QTCodeSpec& spec) {
  const FiniteField& F = spec.q_field;
  json out;
  out["q"] = F.order();
  out["m"] = spec.m;
  out["ell"] = spec.ell;
  out["lambda"] = elem_to_json(F, spec.lambda);
  json gens = json::array();
  for (const auto& row : spec.generators) {
    json r = json::array();
    for (const auto& p : row) {
      json c = json::array();
      for (int i = 0; i < spec.m; ++i) c.push_back(elem_to_json(F, p.coeff(static_cast<std::size_t>(i))));
      r.push_back(c);
    }
    gens.push_back(r);
  }
  out["generators"] = gens;
  return out;
}

std::string serialize_code_spec(const QTCodeSpec& spec) { return code_spec_to_json(spec).dump(2) + "\n"; }

json distance_to_json(Distance d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

json distance_to_json(const std::optional<Distance>& d) {
  if (!d) return nullptr;
  return distance_to_json(*d);
}

std::string distance_to_csv(const std::optional<Distance>& d) { return d ? d->to_string() : ""; }

json analysis_to_json(const QTCodeSpec& spec, const AnalysisOptions& opt) {
  const RootSetup setup = root_setup(spec.q_field, spec.m, spec.lambda);
  const GroebnerMatrix g = groebner_matrix(spec);
  const Spectrum sp = spectrum(g, setup);
  const Factorization fact = factor_xm_minus_lambda(setup);
  json out;
  out["q"] = spec.q_field.order();
  out["m"] = spec.m;
  out["ell"] = spec.ell;
  out["field"] = {{"order", setup.field.order()},
                  {"r", setup.r},
                  {"alpha", setup.field.format(setup.alpha)},
                  {"xi", setup.field.format(setup.xi)}};
  json gm = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.size(); ++j) row.push_back(g(i, j).to_string());
    gm.push_back(row);
  }
  out["groebner"] = gm;
  json diag = json::array();
  for (std::size_t j = 0; j < g.size(); ++j) diag.push_back(g(j, j).to_string());
  out["diagonal"] = diag;
  out["det"] = g.det().to_string();
  out["dimension"] = dimension(g);
  json factors = json::array();
  for (const auto& f : fact.factors) {
    factors.push_back({{"f", f.f.to_string()}, {"u", f.u}, {"degree", f.degree}, {"orbit", f.orbit}});
  }
  out["factors"] = factors;
  json eig = json::array();
  for (const auto& ev : sp.eigen) {
    json e;
    e["k"] = ev.k;
    e["beta"] = setup.field.format(ev.beta);
    e["multiplicity"] = ev.multiplicity;
    e["eigenspace"] = matrix_to_json(ev.eigenspace);
    e["eigencode_distance"] = distance_to_json(eigencode(sp, ExpSet{1} << ev.k, opt.lim).distance);
    eig.push_back(e);
  }
  out["eigenvalues"] = eig;
  out["eigenvalue_set"] = members(sp.mask());
  json extra = json::array();
  for (ExpSet P : opt.eigencode_sets) {
    const Eigencode ec = eigencode(sp, P, opt.lim);
    extra.push_back({{"P", members(P)}, {"dimension", ec.basis.rows()}, {"distance", distance_to_json(ec.distance)}});
  }
  if (!opt.eigencode_sets.empty()) out["eigencodes"] = extra;
  return out;
}

json record_to_json(const BoundRecord& r) {
  json out;
  out["kind"] = to_string(r.kind);
  out["P"] = members(r.P);
  out["d"] = distance_to_json(r.d);
  switch (r.kind) {
    case BoundKind::BCH:
      out["witness"] = {{"e", r.witness[0]}, {"n", r.witness[1]}, {"delta", r.witness[2]}};
      break;
    case BoundKind::HT:
      out["witness"] = {{"e", r.witness[0]},
                        {"n1", r.witness[1]},
                        {"n2", r.witness[2]},
                        {"delta", r.witness[3]},
                        {"s", r.witness[4]}};
      break;
    case BoundKind::ROOS:
      out["witness"] = {{"M", members(static_cast<ExpSet>(r.witness[0]))},
                        {"N", members(static_cast<ExpSet>(r.witness[1]))},
                        {"M_prime", members(static_cast<ExpSet>(r.witness[2]))}};
      break;
    case BoundKind::EXACT:
      break;
  }
  return out;
}

json report_to_json(const BoundReport& rep) {
  json out;
  out["dimension"] = rep.dim;
  out["eigenvalue_set"] = members(rep.eigenvalues);
  out["s"] = rep.s;
  out["d_true"] = distance_to_json(rep.d_true);
  out["d_jensen"] = distance_to_json(rep.d_jensen);
  out["d_spec1"] = distance_to_json(rep.d_spec1);
  out["d_specS"] = distance_to_json(rep.d_specS);
  json w1 = json::array(), ws = json::array();
  for (const auto& r : rep.witness1) w1.push_back(record_to_json(r));
  for (const auto& r : rep.witnessS) ws.push_back(record_to_json(r));
  out["witness_spec1"] = w1;
  out["witness_specS"] = ws;
  if (rep.d_true) {
    json sharp;
    sharp["d_jensen"] = rep.d_jensen && *rep.d_jensen == *rep.d_true;
    sharp["d_spec1"] = rep.d_spec1 && *rep.d_spec1 == *rep.d_true;
    sharp["d_specS"] = rep.d_specS && *rep.d_specS == *rep.d_true;
    out["sharp"] = sharp;
  }
  out["caps_hit"] = rep.caps_hit;
  out["errors"] = rep.errors;
  return out;
}

std::string report_csv_header() { return "dim,eigenvalue_set,s,d_true,d_jensen,d_spec1,d_specS,caps_hit"; }

std::string report_csv_row(const BoundReport& rep) {
  std::ostringstream os;
  os << rep.dim << ',';
  const auto mem = members(rep.eigenvalues);
  for (std::size_t i = 0; i < mem.size(); ++i) os << (i ? " " : "") << mem[i];
  os << ',' << rep.s << ',' << distance_to_csv(rep.d_true) << ',' << distance_to_csv(rep.d_jensen) << ','
     << distance_to_csv(rep.d_spec1) << ',' << distance_to_csv(rep.d_specS) << ',' << (rep.caps_hit ? 1 : 0);
  return os.str();
}

}  // namespace qtbound
