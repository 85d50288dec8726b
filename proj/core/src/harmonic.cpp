#include "artin/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace artin::harmonic {

void GroupFunction::set(const Word& g, Complex v) {
  if (v == Complex(0)) {
    values_.erase(g);
    return;
  }
  values_[g] = v;
}

void GroupFunction::add(const Word& g, Complex v) {
  if (v == Complex(0)) return;
  auto [it, inserted] = values_.try_emplace(g, v);
  if (!inserted) {
    it->second += v;
    if (it->second == Complex(0)) values_.erase(it);
  }
}

Complex GroupFunction::operator()(const Word& g) const {
  auto it = values_.find(g);
  return it == values_.end() ? Complex(0) : it->second;
}

GroupFunction GroupFunction::scaled(Complex c) const {
  GroupFunction out;
  for (const auto& [g, v] : values_) out.set(g, v * c);
  return out;
}

GroupFunction point_mass(const Word& g, Complex v) {
  GroupFunction f;
  f.set(g, v);
  return f;
}

GroupFunction sphere_indicator(const oracle::Ball& ball, int k) {
  if (k < 0 || k > ball.radius()) throw Error(ErrorKind::InvalidArgument, "sphere outside the ball");
  GroupFunction f;
  for (int idx : ball.sphere(k)) f.set(ball.element(idx), 1.0);
  return f;
}

Norms norms(const GroupFunction& phi, double r) {
  double l2 = 0, sob = 0;
  for (const auto& [g, v] : phi.values()) {
    double a = std::norm(v);
    l2 += a;
    sob += a * std::pow(1.0 + static_cast<double>(g.size()), 2 * r);
  }
  return {std::sqrt(l2), std::sqrt(sob)};
}

GroupFunction convolve(const large::ArtinGroup& G, const GroupFunction& phi, const GroupFunction& psi) {
  GroupFunction out;
  for (const auto& [x, u] : phi.values())
    for (const auto& [y, v] : psi.values()) out.add(G.multiply(x, y), u * v);
  return out;
}

GroupFunction sphere_restrict(const GroupFunction& phi, int k) {
  GroupFunction out;
  for (const auto& [g, v] : phi.values())
    if (static_cast<int>(g.size()) == k) out.set(g, v);
  return out;
}

GroupFunction projection(const large::ArtinGroup& G, const GroupFunction& phi_k, int k, int p, Side side) {
  if (p < 0 || p > k) throw Error(ErrorKind::InvalidArgument, "projection needs 0 <= p <= k");
  std::map<Word, double> acc;
  for (const auto& [x, v] : phi_k.values()) {
    if (static_cast<int>(x.size()) != k || G.nf(x) != x)
      throw Error(ErrorKind::InvalidArgument, "projection input must live on C_k");
    for (const Word& d : G.left_divisors(x)) {
      if (side == Side::Right) {
        if (static_cast<int>(d.size()) != k - p) continue;
        if (G.permissible(d, G.multiply(d.inverse(), x))) acc[d] += std::norm(v);
      } else {
        if (static_cast<int>(d.size()) != p) continue;
        Word g = G.multiply(d.inverse(), x);
        if (G.permissible(d, g)) acc[g] += std::norm(v);
      }
    }
  }
  GroupFunction out;
  for (const auto& [g, a] : acc) out.set(g, std::sqrt(a));
  return out;
}

ProjectionTable::ProjectionTable(const large::ArtinGroup& G, const oracle::Ball& ball, int k, int p, Side side)
    : k_(k), p_(p) {
  if (p < 0 || p > k || k > ball.radius()) throw Error(ErrorKind::InvalidArgument, "projection table out of range");
  auto target = ball.sphere(k - p);
  target_size_ = target.size();
  std::unordered_map<int, int> pos;
  for (std::size_t i = 0; i < target.size(); ++i) pos[target[i]] = static_cast<int>(i);
  auto source = ball.sphere(k);
  lists_.resize(source.size());
  for (std::size_t s = 0; s < source.size(); ++s) {
    const Word& x = ball.element(source[s]);
    int cut = side == Side::Right ? k - p : p;
    for (int hidx : ball.interval(source[s], cut)) {
      const Word& d = ball.element(hidx);
      Word rest = G.multiply(d.inverse(), x);
      if (side == Side::Right) {
        if (G.permissible(d, rest)) lists_[s].push_back(pos.at(hidx));
      } else {
        if (G.permissible(d, rest)) lists_[s].push_back(pos.at(ball.index_of(rest)));
      }
    }
    bound_ = std::max(bound_, lists_[s].size());
  }
}

std::vector<double> ProjectionTable::apply_squared(std::span<const Complex> phi) const {
  if (phi.size() != lists_.size()) throw Error(ErrorKind::InvalidArgument, "projection input has the wrong size");
  std::vector<double> out(target_size_, 0.0);
  for (std::size_t s = 0; s < lists_.size(); ++s) {
    double a = std::norm(phi[s]);
    for (int t : lists_[s]) out[static_cast<std::size_t>(t)] += a;
  }
  return out;
}

namespace {

std::vector<Complex> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& z : v) {
    double re = U(rng);
    z = Complex(re, U(rng));
  }
  return v;
}

double sq_norm(std::span<const Complex> v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

}  // namespace

L2Check check_relate_l2(const ProjectionTable& table, const oracle::Ball& ball, Side side, std::size_t trials,
                        std::uint64_t seed, double tolerance) {
  L2Check out;
  out.k = table.k();
  out.p = table.p();
  out.side = side;
  out.bound = table.bound();
  std::mt19937_64 rng(seed);
  std::size_t n = ball.sphere(table.k()).size();
  auto run = [&](const std::vector<Complex>& phi) {
    double in = sq_norm(phi);
    if (in == 0) return;
    double proj = 0;
    for (double a : table.apply_squared(phi)) proj += a;
    double ratio = proj / in;
    out.max_ratio = std::max(out.max_ratio, ratio);
    if (ratio > static_cast<double>(out.bound) * (1 + tolerance)) ++out.violations;
    ++out.trials;
  };
  run(std::vector<Complex>(n, Complex(1)));
  // The extremal input: a point mass on an element with the longest list.
  for (std::size_t s = 0; s < n; ++s)
    if (table.lists()[s].size() == table.bound()) {
      std::vector<Complex> e(n);
      e[s] = 1;
      run(e);
      break;
    }
  for (std::size_t t = 0; t < trials; ++t) run(random_vector(rng, n));
  return out;
}

std::vector<StarStarRow> condition_star_star(const large::ArtinGroup& G, const oracle::Ball& ball, int k, int l,
                                             std::size_t trials, std::uint64_t seed) {
  if (k > ball.radius() || l > ball.radius() || k < 0 || l < 0)
    throw Error(ErrorKind::InvalidArgument, "spheres outside the ball");
  auto Ck = ball.sphere(k), Cl = ball.sphere(l);
  int lo = std::abs(k - l), hi = k + l;
  std::unordered_map<Word, int, WordHash> slot;
  std::vector<int> slot_level;
  std::vector<int> table(Ck.size() * Cl.size());
  for (std::size_t x = 0; x < Ck.size(); ++x)
    for (std::size_t y = 0; y < Cl.size(); ++y) {
      Word z = G.multiply(ball.element(Ck[x]), ball.element(Cl[y]));
      auto [it, fresh] = slot.try_emplace(z, static_cast<int>(slot_level.size()));
      if (fresh) slot_level.push_back(static_cast<int>(z.size()));
      table[x * Cl.size() + y] = it->second;
    }

  auto ratios = [&](const std::vector<Complex>& phi, const std::vector<Complex>& psi) {
    std::vector<Complex> conv(slot_level.size());
    for (std::size_t x = 0; x < Ck.size(); ++x) {
      if (phi[x] == Complex(0)) continue;
      for (std::size_t y = 0; y < Cl.size(); ++y)
        conv[static_cast<std::size_t>(table[x * Cl.size() + y])] += phi[x] * psi[y];
    }
    std::vector<double> per_m(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (std::size_t s = 0; s < conv.size(); ++s) per_m[static_cast<std::size_t>(slot_level[s] - lo)] += std::norm(conv[s]);
    double denom = std::sqrt(sq_norm(phi) * sq_norm(psi));
    for (double& v : per_m) v = std::sqrt(v) / denom;
    return per_m;
  };

  std::vector<StarStarRow> rows;
  for (int m = lo; m <= hi; ++m) rows.push_back({k, l, m, 0, 0, 0});
  auto ones = ratios(std::vector<Complex>(Ck.size(), 1), std::vector<Complex>(Cl.size(), 1));
  std::vector<Complex> ek(Ck.size()), el(Cl.size());
  ek[0] = el[0] = 1;
  auto atom = ratios(ek, el);
  std::mt19937_64 rng(seed);
  std::vector<double> best(rows.size(), 0.0);
  for (std::size_t t = 0; t < trials; ++t) {
    auto phi = random_vector(rng, Ck.size());
    auto psi = random_vector(rng, Cl.size());
    auto r = ratios(phi, psi);
    for (std::size_t i = 0; i < r.size(); ++i) best[i] = std::max(best[i], r[i]);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].random_max = best[i];
    rows[i].all_ones = ones[i];
    rows[i].single_atom = atom[i];
  }
  return rows;
}

ConvolutionOperator convolution_operator(const large::ArtinGroup& G, const GroupFunction& phi, const oracle::Ball& ball,
                                         int radius) {
  if (radius > ball.radius()) throw Error(ErrorKind::InvalidArgument, "radius exceeds the ball");
  ConvolutionOperator op;
  std::unordered_map<Word, int, WordHash> rows;
  for (std::size_t c = 0; c < ball.size() && ball.level(static_cast<int>(c)) <= radius; ++c)
    op.columns.push_back(ball.element(static_cast<int>(c)));
  for (std::size_t c = 0; c < op.columns.size(); ++c)
    for (const auto& [s, v] : phi.values()) {
      Word z = G.multiply(s, op.columns[c]);
      auto [it, fresh] = rows.try_emplace(z, static_cast<int>(op.rows.size()));
      if (fresh) op.rows.push_back(z);
      op.entries.push_back({it->second, static_cast<int>(c), v});
    }
  return op;
}

std::vector<OperatorNormEstimate> operator_norm_estimates(const large::ArtinGroup& G, const GroupFunction& phi,
                                                          const oracle::Ball& ball, int iterations) {
  std::vector<OperatorNormEstimate> out;
  std::vector<Complex> v;
  double best = 0;
  for (int R = 0; R <= ball.radius(); ++R) {
    auto op = convolution_operator(G, phi, ball, R);
    std::size_t n = op.columns.size();
    // New coordinates start nonzero so both parity classes are explored.
    v.resize(n, Complex(1.0 / std::sqrt(static_cast<double>(n))));
    std::vector<Complex> w(op.rows.size());
    auto apply = [&](const std::vector<Complex>& x) {
      std::fill(w.begin(), w.end(), Complex(0));
      for (const auto& e : op.entries) w[static_cast<std::size_t>(e.row)] += e.value * x[static_cast<std::size_t>(e.col)];
    };
    auto rayleigh = [&]() {
      apply(v);
      return std::sqrt(sq_norm(w) / sq_norm(v));
    };
    double est = rayleigh();
    for (int it = 0; it < iterations; ++it) {
      std::vector<Complex> next(n);
      for (const auto& e : op.entries)
        next[static_cast<std::size_t>(e.col)] += std::conj(e.value) * w[static_cast<std::size_t>(e.row)];
      double nn = std::sqrt(sq_norm(next));
      if (nn == 0) break;
      for (auto& z : next) z /= nn;
      v = std::move(next);
      est = std::max(est, rayleigh());
    }
    best = std::max(best, est);
    out.push_back({R, best, n});
  }
  return out;
}

}  // namespace artin::harmonic
