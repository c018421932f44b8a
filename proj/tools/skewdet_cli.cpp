// Command-line front end: euler characteristics, determinantal polynomials,
// batch sweeps and a desk-scale selfcheck, all with canonical JSON output.
// Exit codes: 0 success, 2 input error, 3 consistency failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewdet/brill_noether.hpp"
#include "skewdet/delta.hpp"
#include "skewdet/fcount.hpp"
#include "skewdet/oracles.hpp"
#include "skewdet/parallel.hpp"
#include "skewdet/permutations.hpp"
#include "skewdet/tableaux.hpp"

using nlohmann::json;
using namespace skewdet;

namespace {

constexpr int kInputError = 2;
constexpr int kConsistencyError = 3;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "elapsed_ms=" << ms << "\n";
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text;
}

bool is_standard_sequence(const Parts& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != static_cast<long long>(i)) return false;
  return true;
}

bool one_pointed_applicable(const BNInstance& inst) {
  if (!is_standard_sequence(inst.b)) return false;
  for (long long i = 1; i <= inst.r + 1; ++i)
    if (inst.g - inst.d + inst.a[static_cast<std::size_t>(inst.r + 1 - i)] + i - 1 < 0)
      return false;
  return true;
}

// one record per instance, shared by the euler and sweep commands
json euler_record(const BNInstance& inst, const std::string& method, int jobs, bool& agreement) {
  json rec;
  rec["inputs"] = {{"g", inst.g}, {"r", inst.r},      {"d", inst.d},
                   {"a", inst.a}, {"b", inst.b},      {"method", method}};
  long long rho = bn_rho(inst);
  rec["rho"] = rho;
  auto [rho_prime, nonempty] = nonempty_criterion(inst);
  rec["rho_prime"] = rho_prime;
  rec["nonempty_guaranteed"] = nonempty;
  rec["a_prime"] = a_prime(inst);
  rec["empty_expected"] = rho < 0;
  BNShapes sh = bn_shapes(inst);
  rec["shapes"] = {{"n", sh.n}, {"lam", sh.lam.parts}, {"mu", sh.mu.parts}};

  bool classical = is_standard_sequence(inst.a) && is_standard_sequence(inst.b);
  if (method == "closed" && !classical)
    throw std::invalid_argument("closed forms require a = b = (0, ..., r)");

  json chi;
  std::vector<ExactInt> values;
  auto record = [&](const char* name, const ExactInt& v) {
    chi[name] = v.get_str();
    values.push_back(v);
  };

  bool all = method == "all";
  if (all || method == "thm1") record("thm1", euler_thm1(inst, std::nullopt, jobs));
  if (all || method == "tableau") record("tableau", euler_tableau(inst));
  if (all && rho == 1) record("clpt", clpt_check(inst));
  if (all && is_standard_sequence(inst.b)) {
    record("one_pointed", one_pointed_euler(inst));
    if (one_pointed_applicable(inst)) {
      record("chan_pflueger", chan_pflueger_count(inst));
      if (rho == 1) record("one_pointed_delta", one_pointed_rho1(inst));
    }
  }
  if (all && rho == 0)
    record("numclass", rational_to_integer(numclass_coefficient(inst) * factorial(inst.g)));
  if ((all || method == "closed") && classical) {
    if (rho >= 0 && rho <= inst.g) record("classical", classical_euler(inst.g, inst.r, inst.d));
    if (rho >= 0 && rho <= 3 && rho <= inst.g) {
      ClosedFormValue v = closed_form_euler(inst.g, inst.r, inst.d);
      if (v.degenerate)
        chi["closed_form"] = "degenerate";
      else
        record("closed_form", v.value);
    }
    if (inst.g - inst.d + inst.r == 1 && rho >= 0)
      record("s1_binomial", closed_form_s1(inst.g, inst.r, inst.d));
  }
  if (method == "closed" && values.empty())
    throw std::invalid_argument("no closed-form regime applies to this instance");
  rec["chi"] = chi;

  agreement = true;
  for (const ExactInt& v : values)
    if (v != values.front()) agreement = false;
  rec["agreement"] = agreement;
  return rec;
}

int run_euler(long long g, long long r, long long d, const std::vector<long long>& a,
              const std::vector<long long>& b, const std::string& method, long long max_g,
              int jobs, const std::string& out_path) {
  if (g > max_g) throw std::invalid_argument("g exceeds the configured cap; raise --max-g");
  BNInstance inst(g, r, d, Parts(a.begin(), a.end()), Parts(b.begin(), b.end()));
  bool agreement = false;
  json rec = euler_record(inst, method, jobs, agreement);
  emit(rec.dump() + "\n", out_path);
  return agreement ? 0 : kConsistencyError;
}

Permutation parse_permutation(const std::string& text, long long max_n) {
  std::istringstream ss(text);
  std::vector<int> one_line;
  int v = 0;
  while (ss >> v) one_line.push_back(v);
  if (!ss.eof()) throw std::invalid_argument("permutation must be a space-separated list");
  if (one_line.empty()) throw std::invalid_argument("empty permutation");
  if (static_cast<long long>(one_line.size()) > max_n)
    throw std::invalid_argument("permutation too long; raise --max-n");
  std::vector<bool> seen(one_line.size(), false);
  for (int x : one_line) {
    if (x < 1 || x > static_cast<int>(one_line.size()) || seen[static_cast<std::size_t>(x - 1)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
  return Permutation(std::move(one_line));
}

int run_poly(const std::string& w_text, const std::string& kind, bool double_vars, bool check,
             long long cap_flag, long long max_n, const std::string& out_path) {
  Permutation w = parse_permutation(w_text, max_n);
  bool k_mode = kind == "grothendieck";
  long long len = perm_length(w).get_si();
  long long cap = cap_flag >= 0 ? cap_flag : len + 4;

  json rec;
  rec["inputs"] = {{"w", w.one_line}, {"kind", kind},          {"double", double_vars},
                   {"check", check},  {"cap", cap}};
  rec["length"] = len;

  MultiPoly det;
  if (w.is_identity()) {
    det = MultiPoly(ExactInt(1));
  } else {
    if (!is_321_avoiding(w))
      throw std::invalid_argument("determinant mode needs a 321-avoiding permutation");
    PQData pq = pq_from_perm(w);
    auto [lam, mu] = shape_from_pq(pq);
    rec["shape"] = {{"lam", lam.parts}, {"mu", mu.parts}, {"p", pq.p}, {"q", pq.q}};
    CMatrixSpec spec{pq.p, pq.q, k_mode ? CMode::k_theory : CMode::cohomology};
    det = delta_determinant(lam, mu, spec, k_mode, DegreeCap{cap});
    if (!double_vars) det = det.at_y_zero();
  }
  rec["polynomial"] = det.str();

  bool agreement = true;
  if (check) {
    MultiPoly oracle = k_mode ? grothendieck_oracle(w, double_vars, DegreeCap{cap})
                              : schubert_oracle(w);
    if (!k_mode && !double_vars) oracle = oracle.at_y_zero();
    rec["oracle"] = oracle.str();
    agreement = det == oracle;
    rec["agreement"] = agreement;
  }
  emit(rec.dump() + "\n", out_path);
  return agreement ? 0 : kConsistencyError;
}

// all strictly increasing sequences of the given length inside [0, d]
void sequences_rec(long long len, long long d, long long lo, Parts& cur, std::vector<Parts>& out) {
  if (static_cast<long long>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (long long v = lo; v <= d; ++v) {
    cur.push_back(v);
    sequences_rec(len, d, v + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Parts> sequences(long long len, long long d) {
  std::vector<Parts> out;
  Parts cur;
  if (d >= 0) sequences_rec(len, d, 0, cur, out);
  return out;
}

int run_sweep(long long max_g, long long max_r, long long max_d_flag, bool classical,
              long long rho_filter, long long max_rho, long long cap_g, int jobs,
              const std::string& out_path) {
  if (max_g > cap_g) throw std::invalid_argument("g range exceeds the configured cap");
  if (max_g < 0 || max_r < 0) throw std::invalid_argument("negative range");

  std::vector<BNInstance> instances;
  for (long long g = 0; g <= max_g; ++g)
    for (long long r = 0; r <= max_r; ++r) {
      long long dmax = max_d_flag >= 0 ? max_d_flag : 2 * g;
      for (long long d = 0; d <= dmax; ++d) {
        std::vector<Parts> as;
        std::vector<Parts> bs;
        if (classical) {
          Parts std_seq(static_cast<std::size_t>(r + 1));
          for (long long i = 0; i <= r; ++i) std_seq[static_cast<std::size_t>(i)] = i;
          if (r > d) continue;
          as.push_back(std_seq);
          bs.push_back(std_seq);
        } else {
          as = sequences(r + 1, d);
          bs = as;
        }
        for (const Parts& a : as)
          for (const Parts& b : bs) {
            BNInstance inst(g, r, d, a, b);
            long long rho = bn_rho(inst);
            if (rho_filter != -1000 && rho != rho_filter) continue;
            if (rho_filter == -1000 && (rho < 0 || rho > max_rho)) continue;
            instances.push_back(inst);
          }
      }
    }

  std::vector<std::string> lines(instances.size());
  std::vector<char> agree(instances.size(), 1);
  parallel_for(instances.size(), jobs, [&](std::size_t idx) {
    bool ok = false;
    json rec = euler_record(instances[idx], "all", 1, ok);
    lines[idx] = rec.dump();
    agree[idx] = ok ? 1 : 0;
  });

  std::string buffer;
  bool all_ok = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    buffer += lines[i];
    buffer += "\n";
    if (!agree[i]) all_ok = false;
  }
  emit(buffer, out_path);
  return all_ok ? 0 : kConsistencyError;
}

bool selfcheck_counters(bool quick) {
  long long box = quick ? 3 : 4;
  std::vector<Parts> shapes;
  Parts cur;
  // partitions inside the box, includes the empty one
  std::function<void(long long, long long)> rec = [&](long long row, long long prev) {
    shapes.push_back(cur);
    if (row == box) return;
    for (long long v = 1; v <= prev; ++v) {
      cur.push_back(v);
      rec(row + 1, v);
      cur.pop_back();
    }
  };
  rec(0, box);
  for (const Parts& lam : shapes)
    for (const Parts& mu : shapes) {
      if (mu.size() > lam.size()) continue;
      Parts mu_pad = mu;
      mu_pad.resize(lam.size(), 0);
      bool skew = true;
      for (std::size_t i = 0; i < lam.size(); ++i)
        if (mu_pad[i] > lam[i]) skew = false;
      if (!skew) continue;
      SkewRef shape{Partition(lam), Partition(mu_pad)};
      if (count_standard(shape) != f_det(lam, mu_pad)) return false;
      if (count_alpha(Partition(lam), Partition(mu_pad)) !=
          alpha_determinant(Partition(lam), Partition(mu_pad)))
        return false;
      if (count_zeta(Partition(lam), Partition(mu_pad)) !=
          zeta_determinant(Partition(lam), Partition(mu_pad)))
        return false;
    }
  return true;
}

bool selfcheck_euler(bool quick) {
  long long gmax = quick ? 4 : 5;
  for (long long g = 0; g <= gmax; ++g)
    for (long long r = 0; r <= 1; ++r)
      for (long long d = 0; d <= std::min(2 * g, gmax); ++d)
        for (const Parts& a : sequences(r + 1, d))
          for (const Parts& b : sequences(r + 1, d)) {
            BNInstance inst(g, r, d, a, b);
            long long rho = bn_rho(inst);
            if (rho < 0 || rho > 2) continue;
            ExactInt chi = euler_thm1(inst);
            if (euler_tableau(inst) != chi) return false;
            if (rho == 1 && clpt_check(inst) != chi) return false;
          }
  return true;
}

bool selfcheck_twist(bool) {
  for (const BNInstance& inst :
       {BNInstance(4, 1, 3, {0, 1}, {0, 1}), BNInstance(5, 1, 4, {0, 1}, {0, 1}),
        BNInstance(6, 1, 5, {0, 2}, {0, 1})}) {
    long long n0 = bn_shapes(inst).n;
    if (euler_thm1(inst, n0 + 1) != euler_thm1(inst)) return false;
  }
  return true;
}

bool selfcheck_poly(bool quick) {
  int nmax = quick ? 3 : 4;
  for (int n = 2; n <= nmax; ++n)
    for (const Permutation& w : symmetric_group(n)) {
      if (!is_321_avoiding(w) || w.is_identity()) continue;
      PQData pq = pq_from_perm(w);
      auto [lam, mu] = shape_from_pq(pq);
      CMatrixSpec spec{pq.p, pq.q, CMode::cohomology};
      if (delta_determinant(lam, mu, spec, false, DegreeCap{4}) != schubert_oracle(w))
        return false;
    }
  Permutation w21({2, 1});
  PQData pq = pq_from_perm(w21);
  auto [lam, mu] = shape_from_pq(pq);
  CMatrixSpec spec{pq.p, pq.q, CMode::k_theory};
  if (delta_determinant(lam, mu, spec, true, DegreeCap{4}) !=
      grothendieck_oracle(w21, true, DegreeCap{4}))
    return false;
  return true;
}

bool selfcheck_lemma(bool quick) {
  int nmax = quick ? 3 : 4;
  for (int n = 1; n <= nmax; ++n)
    for (int i = 1; i <= n; ++i)
      if (!verify_lemma_powers(n, i)) return false;
  return true;
}

int run_selfcheck(bool quick, const std::string& out_path) {
  json suites;
  bool all_pass = true;
  auto run = [&](const char* name, bool ok) {
    suites[name] = ok ? "pass" : "fail";
    if (!ok) all_pass = false;
  };
  run("counters_vs_determinants", selfcheck_counters(quick));
  run("euler_cross_formula", selfcheck_euler(quick));
  run("twist_invariance", selfcheck_twist(quick));
  run("polynomial_cross_checks", selfcheck_poly(quick));
  run("lemma_powers", selfcheck_lemma(quick));
  json rec;
  rec["all_pass"] = all_pass;
  rec["quick"] = quick;
  rec["suites"] = suites;
  emit(rec.dump() + "\n", out_path);
  return all_pass ? 0 : kConsistencyError;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"determinantal Brill-Noether and Schubert/Grothendieck calculator"};
  app.require_subcommand(1);

  // euler
  auto* euler = app.add_subcommand("euler", "Euler characteristic of a two-pointed instance");
  long long g = 0, r = 0, d = 0;
  std::vector<long long> a, b;
  std::string method = "all";
  long long max_g = 12;
  int jobs = 0;
  std::string out_path;
  euler->add_option("--g", g, "genus")->required();
  euler->add_option("--r", r, "rank")->required();
  euler->add_option("--d", d, "degree")->required();
  euler->add_option("--a", a, "vanishing sequence at the first point")->required()->delimiter(',');
  euler->add_option("--b", b, "vanishing sequence at the second point")->required()->delimiter(',');
  euler->add_option("--method", method, "all|thm1|tableau|closed")
      ->check(CLI::IsMember({"all", "thm1", "tableau", "closed"}));
  euler->add_option("--max-g", max_g, "genus cap (default 12)");
  euler->add_option("--jobs", jobs, "worker threads (0 = SKEWDET_JOBS or hardware)");
  euler->add_option("--out", out_path, "write the record to a file");

  // poly
  auto* poly = app.add_subcommand("poly", "determinantal Schubert/Grothendieck polynomial");
  std::string w_text, kind = "schubert";
  bool double_vars = false, check = false;
  long long cap_flag = -1, max_n = 6;
  poly->add_option("--w", w_text, "one-line permutation, e.g. \"3 1 2 5 4\"")->required();
  poly->add_option("--kind", kind, "schubert|grothendieck")
      ->check(CLI::IsMember({"schubert", "grothendieck"}));
  poly->add_flag("--double", double_vars, "keep the y variables");
  poly->add_flag("--check", check, "also run the independent oracle and compare");
  poly->add_option("--cap", cap_flag, "beta/series cap (default length(w) + 4)");
  poly->add_option("--max-n", max_n, "permutation size cap (default 6)");
  poly->add_option("--out", out_path, "write the record to a file");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "cross-checked instance sweep, one JSON line each");
  long long sweep_max_g = 6, sweep_max_r = 1, sweep_max_d = -1, rho_filter = -1000, max_rho = 3;
  bool classical = false;
  sweep->add_option("--max-g", sweep_max_g, "largest genus (default 6)");
  sweep->add_option("--max-r", sweep_max_r, "largest rank (default 1)");
  sweep->add_option("--max-d", sweep_max_d, "largest degree (default 2g per genus)");
  sweep->add_flag("--classical", classical, "restrict to a = b = (0, ..., r)");
  sweep->add_option("--rho", rho_filter, "keep only this exact rho");
  sweep->add_option("--max-rho", max_rho, "largest rho kept without --rho (default 3)");
  sweep->add_option("--jobs", jobs, "worker threads (0 = SKEWDET_JOBS or hardware)");
  sweep->add_option("--out", out_path, "write JSON lines to a file");

  // selfcheck
  auto* selfcheck = app.add_subcommand("selfcheck", "run the desk-scale invariant suites");
  bool quick = false;
  selfcheck->add_flag("--quick", quick, "smaller domains, finishes in seconds");
  selfcheck->add_option("--out", out_path, "write the record to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    Timer timer;
    if (euler->parsed()) return run_euler(g, r, d, a, b, method, max_g, jobs, out_path);
    if (poly->parsed())
      return run_poly(w_text, kind, double_vars, check, cap_flag, max_n, out_path);
    if (sweep->parsed())
      return run_sweep(sweep_max_g, sweep_max_r, sweep_max_d, classical, rho_filter, max_rho, 12,
                       jobs, out_path);
    return run_selfcheck(quick, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistencyError;
  }
}
