#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "hitsieve/census.hpp"
#include "hitsieve/charsum.hpp"
#include "hitsieve/dynamics.hpp"
#include "hitsieve/elliptic.hpp"
#include "hitsieve/errors.hpp"
#include "hitsieve/gl2_serre.hpp"
#include "hitsieve/groups.hpp"
#include "hitsieve/primes.hpp"
#include "hitsieve/sieve_bounds.hpp"
#include "runner.hpp"

namespace hitsieve::runner {

namespace {

using nlohmann::json;

std::vector<std::int64_t> int_list(const json& v) { return v.get<std::vector<std::int64_t>>(); }

std::uint64_t as_u64(std::int64_t v, const char* what) {
  if (v < 0) throw DomainError(std::string(what) + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

unsigned as_unsigned(std::int64_t v, const char* what) {
  if (v < 0 || v > 1'000'000) throw DomainError(std::string(what) + " out of range");
  return static_cast<unsigned>(v);
}

std::string fmt(double v) { return format_double(v); }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---- sieve-demo -----------------------------------------------------------

std::vector<std::int64_t> demo_set(const std::string& kind, std::int64_t B, std::int64_t count, std::uint64_t seed) {
  std::vector<std::int64_t> v;
  if (kind == "squares") {
    for (std::int64_t m = 0; m * m <= B; ++m) v.push_back(m * m);
  } else if (kind == "cubes") {
    for (std::int64_t m = 0; m * m * m <= B; ++m) {
      v.push_back(m * m * m);
      if (m) v.push_back(-m * m * m);
    }
  } else if (kind == "pronic") {
    for (std::int64_t m = 0; m * m + m <= B; ++m) v.push_back(m * m + m);
  } else if (kind == "random") {
    std::mt19937_64 rng(derive_seed(seed, 1));
    std::uniform_int_distribution<std::int64_t> u(-B, B);
    for (std::int64_t i = 0; i < count; ++i) v.push_back(u(rng));
  } else {
    throw DomainError("sieve-demo: set must be squares, cubes, pronic or random");
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

ExperimentResult sieve_demo(const json& p, std::uint64_t seed, const Parallelism&) {
  ExperimentResult r;
  const std::string kind = p["set"];
  const std::string occ = p["occupancy"];
  const double Bd = p["B"];
  if (Bd < 2 || Bd > 1e12) throw DomainError("sieve-demo: B must lie in [2, 1e12]");
  const auto B = static_cast<std::int64_t>(Bd);
  const auto values = demo_set(kind, B, p["count"], seed);
  const double x = auto_cutoff(0.5, 1, {}, Bd, 1);
  std::vector<std::uint64_t> J;
  for_each_prime(11, static_cast<std::uint64_t>(x), [&](std::uint64_t q) { J.push_back(q); });

  // The integral inequality budgets the spread of the set, up to 2B for sets in [-B, B].
  const double budget = std::max(1.0, static_cast<double>(values.back() - values.front()));
  SieveInstance inst;
  if (occ == "measured") {
    std::vector<IntPoint> pts;
    for (auto v : values) pts.push_back(IntPoint{{v}});
    inst = measured_instance(std::move(pts), budget, J);
  } else if (occ == "half") {
    if (kind != "squares") throw DomainError("sieve-demo: occupancy half is an upper bound for squares only");
    inst.B = budget;
    for (auto q : J) inst.occupancy[q] = (static_cast<double>(q) + 1) / 2;
  } else {
    throw DomainError("sieve-demo: occupancy must be measured or half");
  }
  const auto res = sieve_bound_int(inst);
  const auto truth = static_cast<double>(values.size());
  r.results = sieve_report(inst, res, true);
  r.results["x_star"] = x;
  r.results["spread_budget"] = budget;
  r.results["primes_in_J"] = J.size();
  r.results["true_count"] = values.size();
  r.results["sqrt_B"] = std::sqrt(Bd);
  if (res.value) {
    r.results["bound_over_sqrt_B"] = *res.value / std::sqrt(Bd);
    if (*res.value < truth) r.invariant_failures.push_back("sieve bound below the true count");
  }
  r.table.columns = {"set", "B", "occupancy", "x_star", "primes", "true_count", "bound", "inconclusive"};
  r.table.add({kind, fmt(Bd), occ, fmt(x), std::to_string(J.size()), std::to_string(values.size()),
               res.value ? fmt(*res.value) : "", res.inconclusive() ? "true" : "false"});
  return r;
}

// ---- vdw-census / disc-square --------------------------------------------

ExperimentResult vdw_census(const json& p, std::uint64_t seed, const Parallelism& par) {
  const unsigned n = as_unsigned(p["n"], "n");
  const std::int64_t B = p["B"];
  const std::string mode_s = p["mode"];
  CensusMode mode;
  if (mode_s == "auto")
    mode = n <= 4 ? CensusMode::Exact : CensusMode::Certificate;
  else if (mode_s == "exact")
    mode = CensusMode::Exact;
  else if (mode_s == "certificate")
    mode = CensusMode::Certificate;
  else
    throw DomainError("vdw-census: mode must be auto, exact or certificate");
  const auto rep = count_census(n, B, mode, as_unsigned(p["budget"], "budget"), seed, par);
  ExperimentResult r;
  r.results = rep.to_json();
  r.table = rep.table();
  if (rep.total() != box_size(n, B)) r.invariant_failures.push_back("label counts do not sum to the box size");
  if (mode == CensusMode::Exact && rep.tag_count(GaloisTag::Undetermined) != 0)
    r.invariant_failures.push_back("exact mode produced Undetermined labels");
  // Reducible polynomials include every t with t_n = 0.
  std::uint64_t floor = 1;
  for (unsigned k = 1; k < n; ++k) floor *= static_cast<std::uint64_t>(2 * B + 1);
  if (rep.tag_count(GaloisTag::Reducible) + rep.tag_count(GaloisTag::NotSeparable) < floor)
    r.invariant_failures.push_back("fewer reducible points than the t_n = 0 slice");
  r.results["reducible_ratio"] =
      static_cast<double>(rep.tag_count(GaloisTag::Reducible)) / std::pow(static_cast<double>(B), n - 1.0);
  return r;
}

ExperimentResult disc_square(const json& p, std::uint64_t, const Parallelism& par) {
  const unsigned n = as_unsigned(p["n"], "n");
  ExperimentResult r;
  r.table.columns = {"n", "B", "count", "bound_shape", "ratio"};
  auto& rows = r.results["rows"] = json::array();
  const std::string shape = "B^(" + std::to_string(n) + "-1/2)";
  for (auto B : int_list(p["B"])) {
    const auto c = count_disc_square(n, B, par);
    const double ratio = static_cast<double>(c) / std::pow(static_cast<double>(B), n - 0.5);
    rows.push_back({{"B", B}, {"count", c}, {"ratio", ratio}});
    r.table.add({std::to_string(n), std::to_string(B), std::to_string(c), shape, fmt(ratio)});
    if (c > box_size(n, B)) r.invariant_failures.push_back("count exceeds the box size");
    if (n == 2 && c != count_census(2, B, CensusMode::Exact, 0, 0, par).e_n_lower())
      r.invariant_failures.push_back("quadratic disc-square count differs from E_2 at B=" + std::to_string(B));
  }
  r.results["bound_shape"] = shape;
  return r;
}

// ---- gl2-verify -----------------------------------------------------------

ExperimentResult gl2_verify(const json& p, std::uint64_t, const Parallelism&) {
  const std::int64_t lmin = std::max(p["lmin"].get<std::int64_t>(), std::int64_t{5});
  const std::int64_t lmax = p["lmax"], fmax = p["formula_lmax"];
  if (lmax > 10'000 || fmax > 10'000) throw DomainError("gl2-verify: ell bounds must be <= 1e4");
  ExperimentResult r;
  r.table.columns = {"ell", "path", "identities", "identity_failures", "dev_C1", "dev_C2", "dev_C3"};
  std::uint64_t identities = 0, identity_failures = 0;
  auto& rows = r.results["rows"] = json::array();
  const std::int64_t top = std::max(lmax, fmax);
  for (std::int64_t ell = lmin; ell <= top; ++ell) {
    if (!is_prime(static_cast<std::uint64_t>(ell))) continue;
    const auto L = static_cast<std::uint32_t>(ell);
    const bool brute = ell <= lmax && L <= kMaxBruteEll;
    if (!brute && ell > fmax) continue;
    std::uint64_t ids = 0, bad = 0;
    if (brute)
      for (std::uint32_t d = 1; d < L; ++d)
        for (std::uint32_t t = 0; t < L; ++t) {
          ++ids;
          bad += count_fixed_trace_det(L, d, t) != count_fixed_trace_det_formula(L, d, t);
        }
    identities += ids;
    identity_failures += bad;
    double dev[3] = {0, 0, 0};
    const Rational target[3] = {Rational(1, 2), Rational(1, 2), Rational(1)};
    for (std::uint32_t d = 1; d < L; ++d)
      for (int i = 1; i <= 3; ++i) {
        const Rational q = class_proportion(L, d, i, brute ? CountPath::Brute : CountPath::Formula);
        dev[i - 1] = std::max(dev[i - 1], std::fabs(boost::rational_cast<double>(q - target[i - 1])));
      }
    // Frozen tolerances for ell >= 17.
    if (ell >= 17) {
      if (dev[0] > 8.0 / ell || dev[1] > 8.0 / ell || dev[2] > 20.0 / ell)
        r.invariant_failures.push_back("Serre proportion outside tolerance at ell=" + std::to_string(ell));
    }
    const std::string path = brute ? "brute" : "formula";
    rows.push_back({{"ell", ell}, {"path", path}, {"identities", ids}, {"identity_failures", bad},
                    {"ell_dev", {dev[0] * ell, dev[1] * ell, dev[2] * ell}}});
    r.table.add({std::to_string(ell), path, std::to_string(ids), std::to_string(bad), fmt(dev[0]), fmt(dev[1]),
                 fmt(dev[2])});
  }
  if (identity_failures) r.invariant_failures.push_back(std::to_string(identity_failures) + " trace/det count identities failed");
  r.results["identities_checked"] = identities;
  r.results["identity_failures"] = identity_failures;
  r.results["tolerances"] = {{"C1", "8/ell"}, {"C2", "8/ell"}, {"C3", "20/ell"}, {"applied_from_ell", 17}};
  return r;
}

// ---- group-indices --------------------------------------------------------

ExperimentResult group_indices(const json& p, std::uint64_t, const Parallelism&) {
  ExperimentResult r;
  r.table.columns = {"m", "gl2_order", "sl2_order", "commutator_order", "index_in_sl2"};
  auto& rows = r.results["rows"] = json::array();
  for (auto m64 : int_list(p["m"])) {
    if (m64 < 2 || m64 > 24) throw ResourceError("group-indices: m must lie in [2, 24]");
    const auto m = static_cast<std::uint32_t>(m64);
    const auto G = gl2_group(m);
    const auto S = sl2_group(m);
    const auto D = commutator_subgroup(G);
    const auto idx = index(S, D);
    rows.push_back({{"m", m}, {"gl2_order", G.order()}, {"sl2_order", S.order()}, {"commutator_order", D.order()},
                    {"index_in_sl2", idx}});
    r.table.add({std::to_string(m), std::to_string(G.order()), std::to_string(S.order()), std::to_string(D.order()),
                 std::to_string(idx)});
    if (!is_normal(G, D)) r.invariant_failures.push_back("commutator subgroup not normal for m=" + std::to_string(m));
    if ((m == 2 || m == 4 || m == 8 || m == 12) && idx != 2)
      r.invariant_failures.push_back("commutator index in SL_2 is not 2 for m=" + std::to_string(m));
  }
  // Level-8 kernel H = ker(GL_2(Z/8) -> GL_2(Z/2)).
  const auto H = congruence_kernel(8, 2);
  const auto DH = commutator_subgroup(H);
  const bool identity = DH == determinant_one(congruence_kernel(8, 4));
  const auto idx8 = index(determinant_one(H), DH);
  std::vector<Mat2> gens = DH.generators();
  for (const auto& u : diagonal_units(8)) gens.push_back(u);
  const auto full = index(gl2_group(8), closure(gens, Mat2::identity(8)));
  r.results["level8"] = {{"commutator_equals_level4_sl2", identity},
                         {"index_in_kernel_sl2", idx8},
                         {"index_in_gl2", full}};
  if (!identity) r.invariant_failures.push_back("level-8 commutator identity failed");
  if (idx8 != 8) r.invariant_failures.push_back("level-8 commutator index is not 8");
  if (full != 48) r.invariant_failures.push_back("level-8 full index is not 48");
  return r;
}

// ---- ec-census ------------------------------------------------------------

ExperimentResult ec_census(const json& p, std::uint64_t, const Parallelism& par) {
  if (p["family"] != "legendre") throw DomainError("ec-census: only the legendre family is built in");
  std::vector<std::uint32_t> ells;
  for (auto e : int_list(p["ells"])) ells.push_back(static_cast<std::uint32_t>(as_u64(e, "ell")));
  const auto rep = family_census(legendre_family(), p["B"], ells, as_u64(p["budget"], "budget"), par);
  ExperimentResult r;
  r.results = rep.to_json();
  r.table = rep.table();
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(rep.B) + 1;
  for (const auto& [ell, c] : rep.per_ell)
    if (c.certified + c.uncertified + c.excluded != width)
      r.invariant_failures.push_back("census partition failed at ell=" + std::to_string(ell));
  return r;
}

// ---- dynamics -------------------------------------------------------------

ExperimentResult dynamics(const json& p, std::uint64_t, const Parallelism& par) {
  auto high_first = int_list(p["coeffs"]);
  std::vector<i128> low_first(high_first.rbegin(), high_first.rend());
  const PolyMap f{IntPoly(low_first)};
  double eps = p["eps"];
  if (eps == 0) eps = 0.5 / std::log(static_cast<double>(f.degree()));
  const std::int64_t P = p["P"];
  const bool rows = p["rows"] != 0;
  const auto prof = density_profile(f, P, as_u64(p["x"], "x"), eps, true, par);
  const auto hg = height_growth_check(f, P, as_unsigned(p["iters"], "iters"));
  ExperimentResult r;
  r.results = prof.to_json();
  r.results["eps"] = eps;
  r.results["height_growth"] = {{"c", hg.c}, {"heights", hg.heights}, {"d", f.degree()}};
  if (rows) r.table = prof.table();
  else r.table.columns = prof.table().columns;
  for (const auto& row : prof.rows)
    if (row.orbit.m_p > row.orbit.p || row.orbit.cycle < 1 || row.orbit.m_p != row.orbit.tail + row.orbit.cycle) {
      r.invariant_failures.push_back("orbit record invariant failed at p=" + std::to_string(row.orbit.p));
      break;
    }
  if (prof.fraction < 0 || prof.fraction > 1) r.invariant_failures.push_back("density fraction outside [0, 1]");
  double scale = 1;
  for (std::size_t i = 0; i < hg.heights.size(); ++i, scale *= f.degree())
    if (hg.heights[i] > scale * (hg.heights[0] + hg.c) * (1 + 1e-12) + 1e-9) {
      r.invariant_failures.push_back("height growth inequality fails with the reported c");
      break;
    }
  return r;
}

// ---- charsum --------------------------------------------------------------

ExperimentResult charsum(const json& p, std::uint64_t, const Parallelism& par) {
  std::vector<unsigned> degs;
  for (auto d : int_list(p["degrees"])) degs.push_back(as_unsigned(d, "degree"));
  const auto scan = charsum_scan(degs, p["C"], as_u64(p["pmax"], "pmax"), p["rows"] != 0, par);
  ExperimentResult r;
  r.results = scan.to_json();
  r.table = scan.table();
  if (scan.failures) r.invariant_failures.push_back(std::to_string(scan.failures) + " instances exceed the bound");
  return r;
}

// ---- bound-calc -----------------------------------------------------------

ExperimentResult bound_calc(const json& p, std::uint64_t, const Parallelism&) {
  CoverBoundInput in;
  in.gg_order = as_u64(p["gg"], "gg");
  {
    std::stringstream ss(p["kappa"].get<std::string>());
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw DomainError("bound-calc: kappa entries look like size:count");
      in.kappa_data.emplace_back(std::stoull(item.substr(0, colon)), std::stoull(item.substr(colon + 1)));
    }
  }
  for (auto s : int_list(p["S"])) in.S.insert(as_u64(s, "S"));
  in.n = as_unsigned(p["n"], "n");
  in.d = as_unsigned(p["d"], "d");
  in.B = p["B"];
  const auto h = hit_bound(in);
  ExperimentResult r;
  r.results = {{"delta", h.delta}, {"c", h.c}, {"bound", h.bound}, {"log_bound", h.log_bound},
               {"formula", "c B^(d(n-1+delta)) log B"}, {"shape_only", true}};
  r.table.columns = {"delta", "c", "bound", "log_bound"};
  r.table.add({fmt(h.delta), fmt(h.c), fmt(h.bound), fmt(h.log_bound)});
  if (!(h.delta > 0 && h.delta <= 1)) r.invariant_failures.push_back("delta outside (0, 1]");
  return r;
}

}  // namespace

const std::vector<ExperimentSpec>& registry() {
  using K = ParamKind;
  static const std::vector<ExperimentSpec> specs = {
      {"sieve-demo", "larger sieve bound for a structured or random integer set",
       {{"set", K::String, "squares", "squares | cubes | pronic | random"},
        {"B", K::Double, "10000", "height budget"},
        {"occupancy", K::String, "measured", "measured | half (squares only)"},
        {"count", K::Int, "200", "size of the random set"}},
       sieve_demo},
      {"vdw-census", "Galois census of x^n + t1 x^(n-1) + ... + tn over the box [-B, B]^n",
       {{"n", K::Int, "3", "degree"},
        {"B", K::Int, "10", "box radius"},
        {"mode", K::String, "auto", "auto | exact | certificate"},
        {"budget", K::Int, "30", "certificate prime budget"}},
       vdw_census},
      {"disc-square", "count of t with square discriminant",
       {{"n", K::Int, "3", "degree"}, {"B", K::IntList, "10,20,40", "box radii"}},
       disc_square},
      {"gl2-verify", "trace/det counts and class proportions in GL_2(F_ell)",
       {{"lmin", K::Int, "5", "smallest ell"},
        {"lmax", K::Int, "31", "largest ell for enumeration (capped at 31)"},
        {"formula_lmax", K::Int, "101", "largest ell for the formula path"}},
       gl2_verify},
      {"group-indices", "commutator indices in SL_2(Z/m) and the level-8 kernel",
       {{"m", K::IntList, "2,4,8,12", "moduli"}},
       group_indices},
      {"ec-census", "mod-ell surjectivity certification across the Legendre family",
       {{"family", K::String, "legendre", "family name"},
        {"B", K::Int, "50", "parameter radius"},
        {"ells", K::IntList, "5,7", "primes ell in [5, 37]"},
        {"budget", K::Int, "2000", "largest prime scanned"}},
       ec_census},
      {"dynamics", "orbit sizes mod p, finite-x density and height growth",
       {{"coeffs", K::IntList, "1,0,1", "map coefficients, highest degree first"},
        {"P", K::Int, "0", "starting point"},
        {"x", K::Int, "100000", "prime bound"},
        {"eps", K::Double, "0", "threshold factor; 0 means 0.5/log d"},
        {"iters", K::Int, "15", "height growth iterations"},
        {"rows", K::Int, "1", "emit per-prime rows (0 or 1)"}},
       dynamics},
      {"charsum", "quadratic character sum deviations against the equidistribution bound",
       {{"degrees", K::IntList, "3,5", "degrees"},
        {"C", K::Int, "3", "coefficient bound"},
        {"pmax", K::Int, "500", "prime bound"},
        {"rows", K::Int, "0", "emit every instance (0 or 1); failures are always emitted"}},
       charsum},
      {"bound-calc", "delta, c and the bound c B^(d(n-1+delta)) log B",
       {{"gg", K::Int, "1", "order of the geometric monodromy group"},
        {"kappa", K::String, "1:1", "comma list of size:count pairs per Frobenius class"},
        {"S", K::IntList, "", "bad primes"},
        {"n", K::Int, "1", "number of parameters"},
        {"B", K::Double, "1000", "height"},
        {"d", K::Int, "1", "field degree"}},
       bound_calc},
  };
  return specs;
}

}  // namespace hitsieve::runner
