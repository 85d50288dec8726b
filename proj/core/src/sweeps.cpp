#include "artin/sweeps.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace artin::sweeps {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_csv(const std::vector<CsvRow>& rows) {
  std::string out = "presentation,k,l,statistic,value\n";
  for (const auto& r : rows)
    out += r.presentation + "," + std::to_string(r.k) + "," + std::to_string(r.l) + "," + r.statistic + "," +
           r.value + "\n";
  return out;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f) {
  std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

std::string str(const Word& w) { return w.empty() ? "1" : to_string(w); }

}  // namespace

// ---------------------------------------------------------------------------
// D1

double d1_bound(int m, int n) {
  auto P = [m](int k) { return 4.0 * m * k * k + 5.0 * (k + 1); };
  auto Q = [&](int k) {
    double s = 0;
    for (int j = 1; j <= k; ++j) s += P(j);
    return s;
  };
  double s = 0;
  for (int j = 0; j <= n; ++j) s += Q(j);
  return 2 * s;
}

D1Result d1_scan(const large::ArtinGroup& G, const oracle::Ball& ball, const std::string& id, int threads,
                  bool allow_counterexample) {
  if (!allow_counterexample) require_33m(G.presentation(), "D1 scan");
  const int R = ball.radius();
  D1Result res;
  res.presentation = id;
  res.radius = R;
  // per element: counts (permissible, all) for k = 0..|g|
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> per(ball.size());
  parallel_for(ball.size(), threads, [&](std::size_t idx) {
    int gi = static_cast<int>(idx);
    int n = ball.level(gi);
    const Word& g = ball.element(gi);
    auto& out = per[idx];
    out.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      auto iv = ball.interval(gi, k);
      std::size_t perm = 0;
      for (int h : iv) {
        const Word& g1 = ball.element(h);
        if (G.permissible(g1, G.multiply(g1.inverse(), g))) ++perm;
      }
      out[static_cast<std::size_t>(k)] = {perm, iv.size()};
    }
  });

  std::map<std::pair<int, int>, D1Cell> cells;
  for (int n = 0; n <= R; ++n)
    for (int k = 0; k <= n; ++k) cells[{n, k}] = D1Cell{k, n - k, 0, 0, {}};
  std::set<std::pair<int, int>> seen;
  for (std::size_t idx = 0; idx < ball.size(); ++idx) {
    int n = ball.level(static_cast<int>(idx));
    for (int k = 0; k <= n; ++k) {
      auto& c = cells[{n, k}];
      auto [perm, all] = per[idx][static_cast<std::size_t>(k)];
      if (seen.insert({n, k}).second || perm > c.f_permissible) {
        c.f_permissible = perm;
        c.argmax = ball.element(static_cast<int>(idx));
      }
      c.f_all = std::max(c.f_all, all);
    }
  }
  for (auto& [key, c] : cells) res.cells.push_back(c);

  int m = G.presentation().max_finite_label();
  for (int mu = 1; mu <= 3; ++mu) {
    D1Series s;
    s.min_kl = mu;
    s.bound = d1_bound(std::max(m, 2), mu);
    for (int n = 2 * mu; n <= R; ++n) {
      std::size_t v = 0;
      for (const auto& c : res.cells)
        if (c.k + c.l == n && std::min(c.k, c.l) == mu) v = std::max(v, c.f_permissible);
      s.values.emplace_back(n, v);
    }
    s.no_growth = true;
    for (auto [n, v] : s.values)
      if (static_cast<double>(v) > s.bound) s.no_growth = false;
    std::size_t len = s.values.size();
    if (len >= 3 && s.values[len - 1].second != s.values[len - 2].second) s.no_growth = false;
    if (!s.values.empty()) res.no_growth = res.no_growth && s.no_growth;
    res.series.push_back(s);
  }
  return res;
}

std::vector<CsvRow> D1Result::rows() const {
  std::vector<CsvRow> out;
  for (const auto& c : cells) {
    out.push_back({presentation, c.k, c.l, "F_P", std::to_string(c.f_permissible)});
    out.push_back({presentation, c.k, c.l, "F", std::to_string(c.f_all)});
  }
  for (const auto& s : series)
    for (auto [n, v] : s.values)
      out.push_back({presentation, s.min_kl, n - s.min_kl, "F_P_at_min", std::to_string(v)});
  return out;
}

std::string D1Result::json() const {
  nlohmann::json j;
  j["presentation"] = presentation;
  j["radius"] = radius;
  j["no_growth"] = no_growth;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cells)
    cs.push_back({{"k", c.k}, {"l", c.l}, {"F_P", c.f_permissible}, {"F", c.f_all}, {"argmax", str(c.argmax)}});
  j["cells"] = cs;
  nlohmann::json ss = nlohmann::json::array();
  for (const auto& s : series) {
    nlohmann::json vals = nlohmann::json::array();
    for (auto [n, v] : s.values) vals.push_back({{"k_plus_l", n}, {"max", v}});
    ss.push_back({{"min_kl", s.min_kl}, {"values", vals}, {"no_growth", s.no_growth}, {"bound", s.bound}});
  }
  j["series"] = ss;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// D2

namespace {

struct PairOutcome {
  large::MergerTriple t;
  dihedral::MergerTripleD td;  // two-generator case only
  Word g;
  bool merged = false;  // |g1 g2| < k + l
  std::vector<std::string> problems;
};

struct CompressionOutcome {
  bool ok = true;
  bool fallback = false;
  std::string problem;
};

bool delta_free(const dihedral::Group& D, const Word& w) {
  for (int e : {1, -1}) {
    Word d = D.context().garside(e);
    if (D.is_left_divisor(d, w) || D.is_right_divisor(d, w)) return false;
  }
  return true;
}

// Compresses a dihedral triple and checks the result against `expected`
// (a word for f1 Delta^r f2 in the whole group), wrapped by outer factors.
CompressionOutcome check_compression(const large::ArtinGroup& G, const dihedral::Group& D,
                                     const dihedral::MergerTripleD& inner, const Word& left_outer,
                                     const Word& right_outer, const Word& expected, bool require_delta_free,
                                     const oracle::Oracle* O) {
  CompressionOutcome out;
  auto fail = [&](const std::string& why) {
    if (out.ok) out.problem = why;
    out.ok = false;
  };
  try {
    auto c = D.compress(inner);
    out.fallback = c.fallback_used;
    Word inner_product = inner.f1 + D.context().garside(inner.r) + inner.f2;
    if (!D.is_geodesic(c.word)) fail("compressed word is not geodesic");
    if (!D.equal(c.word, inner_product)) fail("compressed word changes the element");
    if (require_delta_free && !delta_free(D, c.unsigned_part)) fail("unsigned part has a Delta divisor");
    Word whole = left_outer + c.word + right_outer;
    if (G.nf(whole) != G.nf(expected)) fail("compressed triple differs from f1 Delta^r f2");
    if (O && !O->equal(whole, expected)) fail("oracle rejects the compressed triple");
  } catch (const Error& e) {
    fail(std::string("compression raised: ") + e.what());
  }
  return out;
}

}  // namespace

D2Result d2_scan(const large::ArtinGroup& G, const oracle::Ball& ball, const std::string& id, const D2Options& opt) {
  const auto& pres = G.presentation();
  if (!opt.allow_counterexample) require_33m(pres, "D2 scan");
  const bool two = pres.generators() == 2;
  const int R = ball.radius();
  D2Result res;
  res.presentation = id;
  res.radius = R;
  res.K = G.merge_constant();
  const dihedral::Group* D2 = two ? &G.pair_group(1, 2) : nullptr;
  if (two && !D2->context().finite()) throw Error(ErrorKind::InvalidArgument, "D2 scan needs a finite label");

  struct Task {
    int k, l, g1;
  };
  std::vector<Task> tasks;
  for (int k = 0; k <= R; ++k)
    for (int l = 0; k + l <= R; ++l)
      for (int g1 : ball.sphere(k)) tasks.push_back({k, l, g1});

  std::vector<std::vector<PairOutcome>> outcomes(tasks.size());
  parallel_for(tasks.size(), opt.threads, [&](std::size_t ti) {
    const Task& task = tasks[ti];
    const Word& g1 = ball.element(task.g1);
    int mn = std::min(task.k, task.l);
    for (int g2i : ball.sphere(task.l)) {
      const Word& g2 = ball.element(g2i);
      PairOutcome po;
      auto bad = [&](const std::string& why) { po.problems.push_back(why); };
      Word delta;
      std::tuple<Word, int, Word> replayed;
      bool perm1, perm2;
      if (two) {
        po.td = D2->merge(g1, g2);
        auto& d = po.td;
        po.t.g1 = d.g1;
        po.t.g2 = d.g2;
        po.t.f1 = d.f1;
        po.t.f2 = d.f2;
        po.t.r = d.r;
        po.t.h1 = d.h1;
        po.t.h2 = d.h2;
        if (d.r != 0) {
          po.t.i = 1;
          po.t.j = 2;
        }
        for (const auto& s : d.trace) po.t.trace.push_back({s.kind, 1, 2, s.h, s.h_prime, s.epsilon, s.r_after});
        delta = D2->context().garside(d.r);
        replayed = D2->replay(g1, g2, d.trace);
        perm1 = D2->permissible(d.f1, d.h1).permissible;
        perm2 = D2->permissible(d.h2, d.f2).permissible;
      } else {
        po.t = G.merge(g1, g2, opt.allow_counterexample);
        delta = G.garside(po.t.i, po.t.j, po.t.r);
        replayed = G.replay(g1, g2, po.t.trace);
        perm1 = G.permissible(po.t.f1, po.t.h1);
        perm2 = G.permissible(po.t.h2, po.t.f2);
      }
      const auto& t = po.t;
      po.g = G.multiply(g1, g2);
      po.merged = static_cast<int>(po.g.size()) < task.k + task.l;
      if (G.nf(t.f1 + delta + t.f2) != po.g) bad("f1 Delta^r f2 != g1 g2");
      if (std::abs(t.r) > mn) bad("|r| > min(k,l)");
      int hb = res.K * mn;
      if (static_cast<int>(t.h1.size()) > hb || static_cast<int>(t.h2.size()) > hb) bad("|h| > K min(k,l)");
      if (t.f1.size() + t.h1.size() != static_cast<std::size_t>(task.k) || G.nf(t.f1 + t.h1) != g1)
        bad("(f1, h1) is not a geodesic factorisation of g1");
      if (t.h2.size() + t.f2.size() != static_cast<std::size_t>(task.l) || G.nf(t.h2 + t.f2) != g2)
        bad("(h2, f2) is not a geodesic factorisation of g2");
      if (!perm1) bad("(f1, h1) is not permissible");
      if (!perm2) bad("(h2, f2) is not permissible");
      if (G.nf(t.h1 + t.h2) != G.nf(delta)) bad("h1 h2 != Delta^r");
      if (std::get<0>(replayed) != t.f1 || std::get<1>(replayed) != t.r || std::get<2>(replayed) != t.f2)
        bad("trace replay disagrees");
      outcomes[ti].push_back(std::move(po));
    }
  });

  std::map<std::pair<int, int>, D2Cell> cells;
  std::map<std::tuple<Word, int, int>, large::STReport> groups;
  std::map<std::pair<int, int>, std::set<std::tuple<int, int, int>>> tsets;
  std::map<std::tuple<Word, int, Word>, std::pair<const dihedral::MergerTripleD*, bool>> to_compress;
  auto note = [&](const std::string& s) {
    ++res.total_violations;
    if (res.violations.size() < 20) res.violations.push_back(s);
  };
  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    const Task& task = tasks[ti];
    auto& c = cells[{task.k, task.l}];
    c.k = task.k;
    c.l = task.l;
    c.h_bound = res.K * std::min(task.k, task.l);
    for (const auto& po : outcomes[ti]) {
      const auto& t = po.t;
      ++c.pairs;
      ++res.total_pairs;
      if (!t.trace.empty()) ++c.nontrivial;
      c.max_abs_r = std::max(c.max_abs_r, std::abs(t.r));
      c.max_h1 = std::max(c.max_h1, static_cast<int>(t.h1.size()));
      c.max_h2 = std::max(c.max_h2, static_cast<int>(t.h2.size()));
      for (const auto& p : po.problems) {
        ++c.violations;
        note(p + " for (" + str(t.g1) + ", " + str(t.g2) + ")");
      }
      groups[{po.g, task.k, task.l}].add(t);
      tsets[{task.k, task.l}].insert({t.i, t.j, t.r});
      if (two && opt.compress) {
        auto [it, fresh] = to_compress.try_emplace({t.f1, t.r, t.f2}, &po.td, po.merged);
        if (!fresh) it->second.second = it->second.second || po.merged;
      }
    }
  }

  for (auto& [key, st] : groups) {
    auto& [g, k, l] = key;
    auto& c = cells[{k, l}];
    c.max_s = std::max(c.max_s, st.S.size());
    if (two) continue;
    auto dec = G.split_S(st, g, k, l);
    c.s0 += dec.s0;
    c.s1 += dec.s1;
    c.s2 += dec.s2;
    for (std::size_t i = 0; i < dec.items.size(); ++i) {
      const auto& item = dec.items[i];
      if (!item.checks_ok) {
        ++c.violations;
        if (item.failure == "q > k") ++res.max_q_over_k_violations;
        note("S-split: " + item.failure + " for g=" + str(g));
      }
    }
  }
  for (auto& [kl, ts] : tsets) cells[kl].t_size = ts.size();

  // Compression.
  struct Job {
    const dihedral::Group* D;
    dihedral::MergerTripleD inner;
    Word left, right, expected;
    bool merged;
    std::pair<int, int> cell;
  };
  std::vector<Job> jobs;
  if (opt.compress) {
    if (two) {
      for (auto& [key, entry] : to_compress) {
        auto [td, merged] = entry;
        jobs.push_back({D2, *td, Word(), Word(), td->f1 + D2->context().garside(td->r) + td->f2, merged,
                        {static_cast<int>(td->g1.size()), static_cast<int>(td->g2.size())}});
      }
    } else {
      std::set<std::tuple<int, int, Word, Word>> seen;
      for (auto& [key, st] : groups) {
        auto& [g, k, l] = key;
        auto dec = G.split_S(st, g, k, l);
        for (std::size_t i = 0; i < dec.items.size(); ++i) {
          const auto& item = dec.items[i];
          if (item.part == large::SClass::Part::S0 || item.i == 0 || !pres.finite(item.i, item.j)) continue;
          const auto& e = st.S[i];
          const auto& P = G.pair_group(item.i, item.j);
          Word left = P.nf(item.f1p + item.h1p), right = P.nf(item.h2p + item.f2p);
          if (!seen.insert({item.i, item.j, left, right}).second) continue;
          auto inner = P.merge(left, right);
          bool merged = static_cast<std::size_t>(P.length(left + right)) < left.size() + right.size();
          jobs.push_back({&P, inner, item.f1pp, item.f2pp, e.f1 + G.garside(e.i, e.j, e.r) + e.f2, merged, {k, l}});
        }
      }
    }
  }
  std::vector<CompressionOutcome> cres(jobs.size());
  parallel_for(jobs.size(), opt.threads, [&](std::size_t i) {
    const auto& j = jobs[i];
    cres[i] = check_compression(G, *j.D, j.inner, j.left, j.right, j.expected, j.merged, opt.oracle);
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto& c = cells[jobs[i].cell];
    ++c.compressed;
    ++res.total_compressed;
    if (cres[i].fallback) ++c.compression_fallbacks;
    if (!cres[i].ok) {
      ++c.compression_failures;
      ++res.total_compression_failures;
      if (res.violations.size() < 20)
        res.violations.push_back("compression: " + cres[i].problem + " for (" + str(jobs[i].inner.f1) + ", " +
                                 std::to_string(jobs[i].inner.r) + ", " + str(jobs[i].inner.f2) + ")");
    }
  }
  for (auto& [kl, c] : cells) res.cells.push_back(c);
  return res;
}

std::vector<CsvRow> D2Result::rows() const {
  std::vector<CsvRow> out;
  for (const auto& c : cells) {
    auto add = [&](const char* name, std::size_t v) { out.push_back({presentation, c.k, c.l, name, std::to_string(v)}); };
    add("pairs", c.pairs);
    add("nontrivial", c.nontrivial);
    add("max_abs_r", static_cast<std::size_t>(c.max_abs_r));
    add("max_h1", static_cast<std::size_t>(c.max_h1));
    add("max_h2", static_cast<std::size_t>(c.max_h2));
    add("h_bound", static_cast<std::size_t>(c.h_bound));
    add("T_size", c.t_size);
    add("max_S", c.max_s);
    add("S0", c.s0);
    add("S1", c.s1);
    add("S2", c.s2);
    add("violations", c.violations);
    add("compressed", c.compressed);
    add("compression_failures", c.compression_failures);
    add("compression_fallbacks", c.compression_fallbacks);
  }
  return out;
}

std::string D2Result::json() const {
  nlohmann::json j;
  j["presentation"] = presentation;
  j["radius"] = radius;
  j["K"] = K;
  j["pairs"] = total_pairs;
  j["violations"] = total_violations;
  j["compressed"] = total_compressed;
  j["compression_failures"] = total_compression_failures;
  j["ok"] = ok();
  j["first_failures"] = violations;
  int best_r = -1, best_t = -1;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cells) {
    cs.push_back({{"k", c.k},
                  {"l", c.l},
                  {"pairs", c.pairs},
                  {"max_abs_r", c.max_abs_r},
                  {"max_h1", c.max_h1},
                  {"max_h2", c.max_h2},
                  {"h_bound", c.h_bound},
                  {"T_size", c.t_size},
                  {"max_S", c.max_s},
                  {"S0", c.s0},
                  {"S1", c.s1},
                  {"S2", c.s2},
                  {"violations", c.violations},
                  {"compressed", c.compressed},
                  {"compression_failures", c.compression_failures}});
    if (best_r < 0 || c.max_abs_r > cells[static_cast<std::size_t>(best_r)].max_abs_r)
      best_r = static_cast<int>(&c - cells.data());
    if (best_t < 0 || c.t_size > cells[static_cast<std::size_t>(best_t)].t_size)
      best_t = static_cast<int>(&c - cells.data());
  }
  j["cells"] = cs;
  if (best_r >= 0) {
    const auto& a = cells[static_cast<std::size_t>(best_r)];
    const auto& b = cells[static_cast<std::size_t>(best_t)];
    j["max_abs_r"] = {{"value", a.max_abs_r}, {"k", a.k}, {"l", a.l}};
    j["max_T_size"] = {{"value", b.t_size}, {"k", b.k}, {"l", b.l}};
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Harmonic checks

bool RdCheckResult::ok() const {
  if (support_violations) return false;
  for (const auto& c : l2)
    if (c.violations) return false;
  return true;
}

std::vector<CsvRow> RdCheckResult::l2_rows() const {
  std::vector<CsvRow> out;
  for (const auto& c : l2) {
    bool right = c.side == harmonic::Side::Right;
    int k = right ? c.k - c.p : c.p, l = right ? c.p : c.k - c.p;
    std::string pre = right ? "l2_right_" : "l2_left_";
    out.push_back({presentation, k, l, pre + "bound", std::to_string(c.bound)});
    out.push_back({presentation, k, l, pre + "max_ratio", format_number(c.max_ratio)});
    out.push_back({presentation, k, l, pre + "violations", std::to_string(c.violations)});
  }
  return out;
}

std::string RdCheckResult::star_star_csv() const {
  std::string out = "presentation,k,l,m,statistic,value\n";
  for (const auto& r : star_star) {
    auto line = [&](const char* name, double v) {
      out += presentation + "," + std::to_string(r.k) + "," + std::to_string(r.l) + "," + std::to_string(r.m) + "," +
             name + "," + format_number(v) + "\n";
    };
    line("random_max", r.random_max);
    line("all_ones", r.all_ones);
    line("single_atom", r.single_atom);
  }
  return out;
}

std::string RdCheckResult::json() const {
  nlohmann::json j;
  j["presentation"] = presentation;
  j["radius"] = radius;
  j["ok"] = ok();
  j["support_checks"] = support_checks;
  j["support_violations"] = support_violations;
  std::size_t trials = 0, violations = 0;
  double worst = 0;
  for (const auto& c : l2) {
    trials += c.trials;
    violations += c.violations;
    if (c.bound) worst = std::max(worst, c.max_ratio / static_cast<double>(c.bound));
  }
  j["l2_trials"] = trials;
  j["l2_violations"] = violations;
  j["l2_worst_ratio_over_bound"] = format_number(worst);
  double best = 0;
  int bk = 0, bl = 0, bm = 0;
  for (const auto& r : star_star)
    if (r.random_max > best) {
      best = r.random_max;
      bk = r.k;
      bl = r.l;
      bm = r.m;
    }
  j["star_star_max_random"] = {{"value", format_number(best)}, {"k", bk}, {"l", bl}, {"m", bm}};
  return j.dump(2) + "\n";
}

RdCheckResult rd_check(const large::ArtinGroup& G, const oracle::Ball& ball, const std::string& id,
                       const RdCheckOptions& opt) {
  RdCheckResult res;
  res.presentation = id;
  res.radius = ball.radius();
  const int R = ball.radius();
  std::uint64_t salt = 0;
  for (int k = 1; k <= R; ++k)
    for (int p = 0; p <= k; ++p)
      for (auto side : {harmonic::Side::Right, harmonic::Side::Left}) {
        harmonic::ProjectionTable table(G, ball, k, p, side);
        res.l2.push_back(harmonic::check_relate_l2(table, ball, side, opt.trials, opt.seed * 1000003u + salt++));
      }
  int SR = opt.star_radius < 0 ? R : std::min(opt.star_radius, 2 * R);
  for (int n = 0; n <= SR; ++n)
    for (int k = 0; k <= n; ++k) {
      int l = n - k;
      if (k > R || l > R) continue;
      auto rows = harmonic::condition_star_star(G, ball, k, l, opt.star_trials, opt.seed * 7919u + salt++);
      res.star_star.insert(res.star_star.end(), rows.begin(), rows.end());
    }
  // Convolution support: exact, on the all-ones functions, whose support is
  // every product, for k + l <= R.
  for (int k = 0; k <= R; ++k)
    for (int l = 0; k + l <= R; ++l) {
      auto phi = harmonic::sphere_indicator(ball, k), psi = harmonic::sphere_indicator(ball, l);
      auto conv = harmonic::convolve(G, phi, psi);
      ++res.support_checks;
      for (const auto& [g, v] : conv.values()) {
        int n = static_cast<int>(g.size());
        if (n < std::abs(k - l) || n > k + l) ++res.support_violations;
      }
    }
  return res;
}

// ---------------------------------------------------------------------------
// Worked examples

bool ReproResult::ok() const {
  return std::all_of(items.begin(), items.end(), [](const ReproItem& i) { return i.pass; });
}

std::string ReproResult::text() const {
  std::string out;
  for (const auto& i : items) out += std::string(i.pass ? "PASS " : "FAIL ") + i.name + ": " + i.detail + "\n";
  return out;
}

std::string ReproResult::json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& i : items) j.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
  return nlohmann::json{{"ok", ok()}, {"items", j}}.dump(2) + "\n";
}

ReproResult reproduce_examples() {
  ReproResult res;
  auto item = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
    try {
      auto [pass, detail] = f();
      res.items.push_back({name, pass, detail});
    } catch (const Error& e) {
      res.items.push_back({name, false, std::string(to_string(e.kind())) + ": " + e.what()});
    }
  };
  const Letter a(1, true), b(2, true);

  item("parse-onetail-word", [] {
    Word w = parse_word("b a b a c a b a b", 3);
    return std::pair{w.size() == 9 && to_string(w) == "babacabab", to_string(w)};
  });
  item("alternating", [&] {
    Word w6 = alternating(a, b, 6, AlternatingSide::LeftStart), w5 = alternating(a, b, 5, AlternatingSide::LeftStart);
    Word w0 = alternating(a, b, 0, AlternatingSide::RightEnd);
    return std::pair{to_string(w6) == "ababab" && to_string(w5) == "ababa" && w0.empty(),
                     to_string(w6) + " " + to_string(w5) + " " + str(w0)};
  });
  item("classify-345-433", [] {
    auto c1 = preset("tri345").classify(), c2 = preset("tri433").classify();
    return std::pair{c1.large && c1.satisfies_33m && c2.large && !c2.satisfies_33m,
                     std::string("(3,4,5) large ") + (c1.large ? "yes" : "no") + " 33m " +
                         (c1.satisfies_33m ? "yes" : "no") + "; (4,3,3) large " + (c2.large ? "yes" : "no") + " 33m " +
                         (c2.satisfies_33m ? "yes" : "no")};
  });
  auto ctx3 = dihedral::Context::standard(3);
  item("pn-values", [&] {
    auto p1 = dihedral::pn_values(parse_word("aba", 2), ctx3), p2 = dihedral::pn_values(parse_word("abbA", 2), ctx3);
    return std::pair{p1.p == 3 && p1.n == 0 && p2.p == 2 && p2.n == 1,
                     "aba (" + std::to_string(p1.p) + "," + std::to_string(p1.n) + "), abbA (" + std::to_string(p2.p) +
                         "," + std::to_string(p2.n) + ")"};
  });
  item("geodesic-not-unique", [&] {
    auto v = dihedral::is_geodesic_dihedral(parse_word("aba", 2), ctx3);
    return std::pair{v.geodesic && !v.unique, std::string("aba geodesic, two representatives")};
  });
  item("tau", [&] {
    Word t1 = dihedral::tau(parse_word("aba", 2), ctx3), t2 = dihedral::tau(parse_word("abbA", 2), ctx3);
    return std::pair{to_string(t1) == "bab" && to_string(t2) == "Baab", to_string(t1) + " " + to_string(t2)};
  });
  item("geodesic-enumeration", [&] {
    auto g1 = dihedral::enumerate_geodesics_dihedral(parse_word("aba", 2), ctx3);
    auto g2 = dihedral::enumerate_geodesics_dihedral(parse_word("abbA", 2), ctx3);
    std::set<std::string> s1, s2;
    for (auto& w : g1) s1.insert(to_string(w));
    for (auto& w : g2) s2.insert(to_string(w));
    return std::pair{s1 == std::set<std::string>{"aba", "bab"} && s2 == std::set<std::string>{"abbA", "Baab"},
                     std::to_string(s1.size()) + " and " + std::to_string(s2.size()) + " geodesics"};
  });
  item("rightward-length-reducing-345", [] {
    auto pres = preset("tri345");
    large::ArtinGroup G(pres);
    Word w = pres.parse("a B B A c b b C B a c a a c A");
    Word target = pres.parse("B A A C B c c b a c c a c");
    auto seq = large::rightward_length_reducing(w, pres);
    std::vector<std::string> expected{"aBBA>BAAb", "bcbbCB>CBccbc", "cacaac>accaca"}, got;
    if (seq)
      for (const auto& m : seq->moves) got.push_back(to_string(m.before) + ">" + to_string(m.after));
    bool moves_ok = seq && got == expected && seq->free_cancellation && seq->after == target;
    auto red = G.shortlex_reduce(w);
    oracle::Oracle O(pres);
    bool ok = moves_ok && red.word.size() == 13 && G.equal(red.word, target) && O.equal(red.word, target);
    std::string detail = "15 -> " + std::to_string(red.word.size()) + ", moves";
    for (auto& s : got) detail += " " + s;
    return std::pair{ok, detail};
  });
  item("oracle-relations-345", [] {
    auto pres = preset("tri345");
    oracle::Oracle O(pres);
    bool aba = O.equal(pres.parse("aba"), pres.parse("bab"));
    bool aca = O.equal(pres.parse("aca"), pres.parse("cac"));
    bool bcb = O.equal(pres.parse("bcb"), pres.parse("cbc"));
    return std::pair{aba && !aca && !bcb, std::string("aba=bab, aca!=cac, bcb!=cbc")};
  });
  item("ld12-433", [] {
    auto pres = preset("tri433");
    large::ArtinGroup G(pres);
    Word g = pres.parse("babacabab");
    Word ld = G.ld(g, 1, 2);
    return std::pair{G.equal(ld, pres.parse("baba")), "LD_12 = " + to_string(ld)};
  });
  item("onetail-counterexample-433", [] {
    auto pres = preset("tri433");
    large::ArtinGroup G(pres);
    Word g = pres.parse("babacabab");
    const auto& geos = G.geodesics(g);
    bool has1 = std::find(geos.begin(), geos.end(), pres.parse("babcacbab")) != geos.end();
    bool has2 = std::find(geos.begin(), geos.end(), pres.parse("abacbcaba")) != geos.end();
    bool guarded = false;
    try {
      (void)G.ld_prime(g, 1, 2);
    } catch (const Error& e) {
      guarded = e.kind() == ErrorKind::HypothesisViolated;
    }
    auto lp = G.ld_prime(g, 1, 2, true);
    std::string detail = std::to_string(geos.size()) + " geodesics, tail letters";
    for (Letter x : lp.tails) detail += " " + to_string(x);
    detail += guarded ? ", guard triggers" : ", guard silent";
    return std::pair{has1 && has2 && guarded && lp.tails.size() == 2, detail};
  });
  return res;
}

}  // namespace artin::sweeps
