#include "boxdioph/io.hpp"

#include <cmath>
#include <random>

#include "boxdioph/frobenius.hpp"

namespace boxdioph {

namespace {

[[noreturn]] void parse_fail(std::string_view field, const std::string &what) {
  throw Error(ErrorKind::Parse,
              "field '" + std::string(field) + "': " + what);
}

Integer parse_integer(const Json &v, std::string_view field) {
  if (v.is_number_integer())
    return Integer(v.dump());
  if (v.is_string()) {
    const auto &s = v.get_ref<const std::string &>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0)
      parse_fail(field, "'" + s + "' is not a decimal integer");
    return out;
  }
  parse_fail(field, "expected an integer or a decimal string, got " + v.dump());
}

std::size_t parse_count(const Json &j, std::string_view field) {
  if (!j.contains(std::string(field)))
    parse_fail(field, "missing");
  const Json &v = j.at(std::string(field));
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    parse_fail(field, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Json rational(const Rational &q) { return q.get_str(); }

std::uint64_t draw(std::mt19937_64 &rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return static_cast<std::uint64_t>(lo) + rng() % span;
}

long uniform(std::mt19937_64 &rng, long lo, long hi) {
  return static_cast<long>(draw(rng, lo, hi));
}

bool facet_passes(const FacetMargin &f, const Integer &k) {
  const Rational c = f.coordinate + k;
  return sgn(c) >= 0 && c * c >= f.rhs_squared;
}

} // namespace

IntVector parse_integer_array(const Json &j, std::string_view field) {
  if (!j.is_array())
    parse_fail(field, "expected an array");
  IntVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_integer(j[i], std::string(field) + "[" +
                                          std::to_string(i) + "]"));
  return out;
}

ProblemInstance instance_from_json(const Json &j) {
  if (!j.is_object())
    throw Error(ErrorKind::Parse, "instance must be a JSON object");
  const std::size_t m = parse_count(j, "m");
  const std::size_t n = parse_count(j, "n");
  if (m == 0 || m >= n)
    parse_fail("m", "need 0 < m < n (m=" + std::to_string(m) +
                        ", n=" + std::to_string(n) + ")");
  if (!j.contains("A"))
    parse_fail("A", "missing");
  if (!j.contains("b"))
    parse_fail("b", "missing");
  const IntVector flat = parse_integer_array(j.at("A"), "A");
  if (flat.size() != m * n)
    parse_fail("A", "expected " + std::to_string(m * n) + " entries, got " +
                        std::to_string(flat.size()));
  ProblemInstance inst;
  inst.A = IntMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k)
      inst.A(i, k) = flat[i * n + k];
  inst.b = parse_integer_array(j.at("b"), "b");
  if (inst.b.size() != m)
    parse_fail("b", "expected " + std::to_string(m) + " entries");
  if (j.contains("basis_cols") && !j.at("basis_cols").is_null()) {
    const Json &bc = j.at("basis_cols");
    if (!bc.is_array() || bc.size() != m)
      parse_fail("basis_cols", "expected an array of " + std::to_string(m) +
                                   " column indices");
    std::vector<std::size_t> cols;
    for (const auto &c : bc) {
      if (!c.is_number_integer() || c.get<long>() < 1 ||
          c.get<long>() > static_cast<long>(n))
        parse_fail("basis_cols", "index " + c.dump() + " outside 1.." +
                                     std::to_string(n));
      cols.push_back(c.get<std::size_t>() - 1);
    }
    inst.basis_cols = cols;
  }
  return inst;
}

ProblemInstance parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return instance_from_json(j);
}

Json integer_array(std::span<const Integer> v) {
  Json arr = Json::array();
  for (const auto &x : v)
    arr.push_back(x.get_str());
  return arr;
}

Json instance_to_json(const ProblemInstance &inst) {
  Json j;
  j["m"] = inst.A.rows();
  j["n"] = inst.A.cols();
  Json a = Json::array();
  for (std::size_t i = 0; i < inst.A.rows(); ++i)
    for (std::size_t k = 0; k < inst.A.cols(); ++k)
      a.push_back(inst.A(i, k).get_str());
  j["A"] = std::move(a);
  j["b"] = integer_array(inst.b);
  if (inst.basis_cols) {
    Json bc = Json::array();
    for (auto c : *inst.basis_cols)
      bc.push_back(c + 1);
    j["basis_cols"] = std::move(bc);
  }
  return j;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json report_to_json(const ConditionReport &report) {
  Json j;
  j["holds"] = report.holds;
  j["t_squared"] = rational(report.t_squared);
  Json facets = Json::array();
  for (const auto &f : report.per_facet) {
    Json fj;
    fj["facet"] = f.facet + 1;
    fj["coordinate"] = rational(f.coordinate);
    fj["lhs_squared"] = rational(f.lhs_squared);
    fj["rhs_squared"] = rational(f.rhs_squared);
    fj["lhs_nonnegative"] = f.lhs_nonnegative;
    fj["passes"] = f.passes;
    facets.push_back(std::move(fj));
  }
  j["per_facet_margins"] = std::move(facets);
  return j;
}

Json m1_summary(const ProblemInstance &inst) {
  Json j;
  const IntVector a = inst.A.row(0);
  try {
    const Integer G = brauer_G(a);
    j["G"] = G.get_str();
    j["applies"] = inst.b[0] > G;
  } catch (const Error &e) {
    j["G"] = nullptr;
    j["applies"] = false;
    j["reason"] = e.what();
  }
  return j;
}

Json m2_summary(const IntMatrix &B, const IntMatrix &N,
                std::span<const Integer> b) {
  Json j;
  const auto report = shifted_cone_condition_m2(B, N, b);
  if (!report) {
    j["not_applicable"] = true;
    j["reason"] = "some column of N lies outside cone(B)";
    return j;
  }
  j["eq12_holds"] = report->holds;
  j["s_squared"] = rational(report->t_squared);
  j["report"] = report_to_json(*report);
  return j;
}

namespace {

Json basis_cols_json(const ColumnSelection &cols) {
  Json j = Json::array();
  for (auto c : cols.basis)
    j.push_back(c + 1);
  return j;
}

Json theorem1_block(const SolveTrace &tr, std::span<const Integer> b) {
  const ConditionReport r = deep_cone_condition(tr.B, tr.N, tr.gcd_A, b);
  Json j;
  j["theorem1_holds"] = r.holds;
  j["t_squared"] = rational(r.t_squared);
  j["det_B"] = tr.det_B.get_str();
  j["gcd_A"] = tr.gcd_A.get_str();
  j["per_facet_margins"] = report_to_json(r)["per_facet_margins"];
  return j;
}

} // namespace

Json result_to_json(const ProblemInstance &inst, const DetailedSolve &solved,
                    const ResultOptions &opts) {
  const SolveOutcome &out = solved.outcome;
  const SolveTrace &tr = solved.trace;
  Json j;
  j["status"] = to_string(out.status);
  if (out.status != SolveStatus::IntegerInfeasible)
    j["x"] = integer_array(out.x);
  if (out.status == SolveStatus::IntegerOnly)
    j["note"] = "integer solution has a negative entry; this does not prove "
                "that no nonnegative solution exists";
  j["basis_cols"] = basis_cols_json(tr.columns);
  j["condition"] = theorem1_block(tr, inst.b);
  if (inst.A.rows() == 1)
    j["m1"] = m1_summary(inst);
  if (inst.A.rows() == 2)
    j["m2"] = m2_summary(tr.B, tr.N, inst.b);
  if (opts.seconds)
    j["timing"] = Json{{"seconds", *opts.seconds}};
  return j;
}

namespace {

struct Partition {
  ColumnSelection cols;
  IntMatrix B, N;
};

Partition partition(const ProblemInstance &inst) {
  Partition p;
  p.cols = inst.basis_cols ? make_column_selection(inst.A, *inst.basis_cols)
                           : select_basis_columns(inst.A);
  const std::size_t m = inst.A.rows();
  std::vector<std::size_t> first(p.cols.order.begin(),
                                 p.cols.order.begin() + static_cast<long>(m));
  std::vector<std::size_t> rest(p.cols.order.begin() + static_cast<long>(m),
                                p.cols.order.end());
  p.B = inst.A.select_columns(first);
  p.N = inst.A.select_columns(rest);
  if (sgn(det_exact(p.B)) == 0)
    throw Error(ErrorKind::Singular, "selected basis columns are singular");
  return p;
}

Json general_bound_block(const ProblemInstance &inst) {
  const std::size_t m = inst.A.rows();
  const std::size_t n = inst.A.cols();
  Json j;
  j["t_bound"] = Json{{"approx", general_t_bound(inst.A)}};
  j["p_mn"] = Json{{"approx", p_factor(m, n)}};
  j["hermite_threshold"] = "not evaluated";
  return j;
}

} // namespace

Json check_to_json(const ProblemInstance &inst) {
  const Partition p = partition(inst);
  SolveTrace tr;
  tr.columns = p.cols;
  tr.B = p.B;
  tr.N = p.N;
  tr.det_B = det_exact(p.B);
  tr.gcd_A = gcd_max_minors(inst.A);
  Json j;
  j["basis_cols"] = basis_cols_json(p.cols);
  j["condition"] = theorem1_block(tr, inst.b);
  if (inst.A.rows() == 1)
    j["m1"] = m1_summary(inst);
  if (inst.A.rows() == 2)
    j["m2"] = m2_summary(p.B, p.N, inst.b);
  j["general_bound"] = general_bound_block(inst);
  return j;
}

Json bounds_to_json(const ProblemInstance &inst) {
  const Partition p = partition(inst);
  const Integer gcdA = gcd_max_minors(inst.A);
  const ConditionReport deep = deep_cone_condition(p.B, p.N, gcdA, inst.b);
  Json j;
  j["det_AAT"] = det_exact(inst.A * inst.A.transpose()).get_str();
  j["det_B"] = det_exact(p.B).get_str();
  j["gcd_A"] = gcdA.get_str();
  j["deep_cone_t"] = Json{{"t_squared", rational(deep.t_squared)},
                          {"approx", std::sqrt(deep.t_squared.get_d())}};
  if (inst.A.rows() == 2) {
    const auto shifted = shifted_cone_condition_m2(p.B, p.N, inst.b);
    if (shifted)
      j["shifted_cone"] = Json{{"s_squared", rational(shifted->t_squared)},
                             {"approx", std::sqrt(shifted->t_squared.get_d())}};
    else
      j["shifted_cone"] = Json{{"not_applicable", true}};
  }
  j["general_bound"] = general_bound_block(inst);
  return j;
}

Json frobenius_to_json(std::span<const Integer> a) {
  Json j;
  j["a"] = integer_array(a);
  j["f"] = integer_array(f_chain(a));
  j["G"] = brauer_G(a).get_str();
  try {
    j["F"] = frobenius_number_dp(a).get_str();
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::CapExceeded)
      throw;
    j["F"] = nullptr;
    j["F_skipped"] = e.what();
  }
  return j;
}

GenMode parse_gen_mode(std::string_view s) {
  if (s == "feasible")
    return GenMode::Feasible;
  if (s == "deep")
    return GenMode::Deep;
  if (s == "boundary")
    return GenMode::Boundary;
  throw Error(ErrorKind::Parse, "unknown mode '" + std::string(s) + "'");
}

Integer deep_cone_shift(const IntMatrix &B, const IntMatrix &N,
                        const Integer &gcdA, std::span<const Integer> b) {
  const ConditionReport r = deep_cone_condition(B, N, gcdA, b);
  Integer k = 0;
  for (const auto &f : r.per_facet) {
    // ceil_sqrt(rhs) - floor(c) is enough; the minimum is at most two below.
    Integer cand = ceil_sqrt(f.rhs_squared) - floor_of(f.coordinate);
    if (sgn(cand) < 0)
      cand = 0;
    while (sgn(cand) > 0 && facet_passes(f, cand - 1))
      --cand;
    if (cand > k)
      k = cand;
  }
  return k;
}

ProblemInstance generate_instance(const GenOptions &opts) {
  const std::size_t m = opts.m;
  const std::size_t n = opts.n;
  if (m == 0 || m >= n)
    throw Error(ErrorKind::DimensionMismatch, "need 0 < m < n");
  if (opts.max_entry < 1)
    throw Error(ErrorKind::DimensionMismatch, "max entry must be positive");
  std::mt19937_64 rng(opts.seed);
  const long lo = opts.positive ? 1 : -opts.max_entry;

  constexpr int kRetries = 1000;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    ProblemInstance inst;
    inst.A = IntMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n; ++k)
        inst.A(i, k) = uniform(rng, lo, opts.max_entry);
    std::vector<std::size_t> first(m), rest(n - m);
    for (std::size_t i = 0; i < m; ++i)
      first[i] = i;
    for (std::size_t i = m; i < n; ++i)
      rest[i - m] = i;
    const IntMatrix B = inst.A.select_columns(first);
    if (sgn(det_exact(B)) == 0)
      continue;
    const IntMatrix N = inst.A.select_columns(rest);

    if (opts.mode == GenMode::Boundary) {
      IntVector xb(m);
      for (auto &v : xb)
        v = uniform(rng, 0, opts.max_multiplier);
      xb[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1))] = 0;
      inst.b = B * xb;
      return inst;
    }

    IntVector x(n);
    for (auto &v : x)
      v = uniform(rng, 0, opts.max_multiplier);
    inst.b = inst.A * x;
    if (opts.mode == GenMode::Deep) {
      const Integer gcdA = gcd_max_minors(inst.A);
      const Integer k = deep_cone_shift(B, N, gcdA, inst.b);
      const IntVector shift = B * IntVector(m, k);
      for (std::size_t i = 0; i < m; ++i)
        inst.b[i] += shift[i];
      if (!deep_cone_condition(B, N, gcdA, inst.b).holds)
        throw Error(ErrorKind::Internal, "deep-cone shift did not reach C_B(t)");
    }
    return inst;
  }
  throw Error(ErrorKind::Internal,
              "no nonsingular basis after " + std::to_string(kRetries) +
                  " draws");
}

} // namespace boxdioph
