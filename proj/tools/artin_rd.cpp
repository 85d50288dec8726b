// artin-rd: normal forms, divisors, merging and the D1/D2/harmonic sweeps
// for Artin groups of large type.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "artin/harmonic.hpp"
#include "artin/large_type.hpp"
#include "artin/oracle.hpp"
#include "artin/sweeps.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace artin;

namespace {

struct Config {
  std::string preset = "tri345";
  std::string presentation_file;
  std::string order;
  bool json = false;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out_dir;
  bool allow_counterexample = false;
  int radius = 4;
  std::size_t trials = 1000;
  bool no_oracle = false;
};

struct Loaded {
  CoxeterPresentation pres;
  LetterOrder order;
  std::string id;
};

Loaded load(const Config& cfg) {
  Loaded L;
  if (!cfg.presentation_file.empty()) {
    L.pres = load_presentation(cfg.presentation_file);
    L.id = L.pres.name().empty() ? fs::path(cfg.presentation_file).stem().string() : L.pres.name();
  } else {
    L.pres = preset(cfg.preset);
    L.id = cfg.preset;
  }
  validate_presentation(L.pres);
  if (cfg.order.empty()) {
    L.order = L.pres.standard_order();
  } else {
    Word seq = L.pres.parse(cfg.order);
    L.order = LetterOrder::from_sequence(std::vector<Letter>(seq.begin(), seq.end()));
  }
  return L;
}

std::string str(const Word& w) { return w.empty() ? "" : to_string(w); }

json words(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(str(w));
  return a;
}

json letters(const std::vector<Letter>& ls) {
  json a = json::array();
  for (Letter l : ls) a.push_back(to_string(l));
  return a;
}

// Writes to <out>/<name> when an output directory is configured, else stdout.
void emit(const Config& cfg, const std::string& name, const std::string& text) {
  if (cfg.out_dir.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(cfg.out_dir);
  std::ofstream f(fs::path(cfg.out_dir) / name, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write to " + cfg.out_dir);
  f << text;
}

void print(const Config& cfg, const json& j, const std::string& text) {
  if (cfg.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

json move_json(const large::TauMove& m) {
  return {{"start", m.start}, {"length", m.length}, {"before", str(m.before)}, {"after", str(m.after)}};
}

void cmd_nf(const Config& cfg, const std::string& text) {
  auto L = load(cfg);
  large::ArtinGroup G(L.pres, L.order);
  Word w = L.pres.parse(text);
  auto red = G.shortlex_reduce(w);
  json log = json::array();
  std::string out = "normal form: " + (red.word.empty() ? std::string("1") : to_string(red.word)) +
                    "\nlength: " + std::to_string(red.word.size()) + "\n";
  for (const auto& s : red.log) {
    if (s.kind == large::ReductionStep::Kind::Append) continue;
    json e{{"letter", s.letter}, {"kind", large::to_string(s.kind)}, {"prefix", str(s.prefix)}};
    out += "  letter " + std::to_string(s.letter) + " " + large::to_string(s.kind);
    if (s.sequence) {
      json moves = json::array();
      for (const auto& m : s.sequence->moves) {
        moves.push_back(move_json(m));
        out += " [" + to_string(m.before) + " -> " + to_string(m.after) + "]";
      }
      e["moves"] = moves;
      e["free_cancellation"] = s.sequence->free_cancellation;
    }
    out += " => " + (s.prefix.empty() ? std::string("1") : to_string(s.prefix)) + "\n";
    log.push_back(e);
  }
  print(cfg, {{"input", str(w)}, {"normal_form", str(red.word)}, {"length", red.word.size()}, {"log", log}}, out);
}

void cmd_geodesic(const Config& cfg, const std::string& text) {
  auto L = load(cfg);
  large::ArtinGroup G(L.pres, L.order);
  Word w = L.pres.parse(text);
  Word g = G.nf(w);
  bool geo = G.is_geodesic(w);
  const auto& geos = G.geodesics(g);
  json j{{"input", str(w)}, {"geodesic", geo}, {"length", g.size()}, {"normal_form", str(g)}, {"geodesics", words(geos)}};
  std::string out = std::string(geo ? "geodesic" : "not geodesic") + ", element length " + std::to_string(g.size()) +
                    ", " + std::to_string(geos.size()) + " geodesic spellings\n";
  if (!g.empty()) {
    j["initial_letters"] = letters(G.initial_letters(g));
    j["final_letters"] = letters(G.final_letters(g));
  }
  for (const auto& x : geos) out += "  " + to_string(x) + "\n";
  print(cfg, j, out);
}

void cmd_ball(const Config& cfg, int R) {
  auto L = load(cfg);
  large::ArtinGroup G(L.pres, L.order);
  auto B = oracle::Ball::from_engine(G, R);
  json spheres = json::array();
  std::string out = "ball of radius " + std::to_string(R) + ": " + std::to_string(B.size()) + " elements\n";
  for (int k = 0; k <= R; ++k) {
    spheres.push_back(B.sphere(k).size());
    out += "  |C_" + std::to_string(k) + "| = " + std::to_string(B.sphere(k).size()) + "\n";
  }
  print(cfg, {{"presentation", L.id}, {"radius", R}, {"size", B.size()}, {"spheres", spheres}}, out);
}

void cmd_divisors(const Config& cfg, const std::string& text, int i, int j) {
  auto L = load(cfg);
  large::ArtinGroup G(L.pres, L.order);
  if (i == j || i < 1 || j < 1 || i > L.pres.generators() || j > L.pres.generators())
    throw Error(ErrorKind::InvalidArgument, "divisors needs two distinct generator indices");
  Word g = G.nf(L.pres.parse(text));
  Word ld = G.ld(g, i, j), rd = G.rd(g, i, j);
  json out{{"element", str(g)}, {"i", i}, {"j", j}, {"ld", str(ld)}, {"rd", str(rd)}};
  std::string s = "LD = " + str(ld) + "\nRD = " + str(rd) + "\n";
  auto lp = G.ld_prime(g, i, j, cfg.allow_counterexample);
  out["ld_prime"] = str(lp.ld_prime);
  out["case"] = lp.which;
  if (lp.letter) out["letter"] = to_string(*lp.letter);
  out["tails"] = letters(lp.tails);
  out["witnesses"] = words(lp.witnesses);
  s += "LD' = " + str(lp.ld_prime) + " (case " + std::to_string(lp.which) + ")\n";
  if (lp.tails.size() > 1) {
    s += "tail letter is not unique:";
    for (std::size_t k = 0; k < lp.tails.size(); ++k)
      s += " " + to_string(lp.tails[k]) + " via " + to_string(lp.witnesses[k]);
    s += "\n";
  }
  print(cfg, out, s);
}

json trace_json(const std::vector<large::MergeStep>& trace) {
  json a = json::array();
  for (const auto& s : trace)
    a.push_back({{"kind", dihedral::to_string(s.kind)},
                 {"i", s.i},
                 {"j", s.j},
                 {"h", str(s.h)},
                 {"h_prime", str(s.h_prime)},
                 {"epsilon", s.epsilon},
                 {"r", s.r_after}});
  return a;
}

// The dihedral group holding both words, or none.
const dihedral::Group* common_pair(const large::ArtinGroup& G, const Word& a, const Word& b) {
  auto names = (a + b).names();
  int n = G.generators();
  if (n == 2) return &G.pair_group(1, 2);
  if (names.size() > 2) return nullptr;
  int i = names.empty() ? 1 : names[0];
  int j = names.size() == 2 ? names[1] : (i == 1 ? 2 : 1);
  if (i > j) std::swap(i, j);
  if (!G.presentation().finite(i, j)) return nullptr;
  return &G.pair_group(i, j);
}

void cmd_merge(const Config& cfg, const std::string& a, const std::string& b) {
  auto L = load(cfg);
  large::ArtinGroup G(L.pres, L.order);
  Word g1 = L.pres.parse(a), g2 = L.pres.parse(b);
  large::MergerTriple t;
  if (L.pres.generators() == 2) {
    auto d = G.pair_group(1, 2).merge(g1, g2);
    t.g1 = d.g1;
    t.g2 = d.g2;
    t.f1 = d.f1;
    t.f2 = d.f2;
    t.r = d.r;
    t.h1 = d.h1;
    t.h2 = d.h2;
    if (d.r) {
      t.i = 1;
      t.j = 2;
    }
    for (const auto& s : d.trace) t.trace.push_back({s.kind, 1, 2, s.h, s.h_prime, s.epsilon, s.r_after});
  } else {
    t = G.merge(g1, g2, cfg.allow_counterexample);
  }
  json j{{"g1", str(t.g1)}, {"g2", str(t.g2)}, {"f1", str(t.f1)}, {"i", t.i},          {"j", t.j},
         {"r", t.r},        {"f2", str(t.f2)}, {"h1", str(t.h1)}, {"h2", str(t.h2)}, {"trace", trace_json(t.trace)}};
  std::string s = "(" + str(t.f1) + ", Delta_" + std::to_string(t.i) + std::to_string(t.j) + "^" + std::to_string(t.r) +
                  ", " + str(t.f2) + ")  h1 = " + str(t.h1) + ", h2 = " + str(t.h2) + "\n";
  for (const auto& st : t.trace)
    s += "  " + std::string(dihedral::to_string(st.kind)) + " h = " + str(st.h) + ", h' = " + str(st.h_prime) +
         ", r = " + std::to_string(st.r_after) + "\n";
  print(cfg, j, s);
}

void cmd_compress(const Config& cfg, const std::string& a, const std::string& b) {
  auto L = load(cfg);
  large::ArtinGroup G(L.pres, L.order);
  Word g1 = L.pres.parse(a), g2 = L.pres.parse(b);
  const dihedral::Group* D = common_pair(G, g1, g2);
  if (!D) throw Error(ErrorKind::InvalidArgument, "compress needs both words in one finite two-generator subgroup");
  auto t = D->merge(g1, g2);
  auto c = D->compress(t);
  json log = json::array();
  std::string s = "merger (" + str(t.f1) + ", Delta^" + std::to_string(t.r) + ", " + str(t.f2) + ")\n";
  for (const auto& st : c.log) {
    log.push_back({{"stage", st.stage}, {"before", str(st.before)}, {"after", str(st.after)}});
    s += "  " + st.stage + ": " + str(st.before) + " -> " + str(st.after) + "\n";
  }
  s += "word = " + str(c.word) + "\nkappa = " + str(c.kappa) + "\n";
  print(cfg,
        {{"f1", str(t.f1)},
         {"r", t.r},
         {"f2", str(t.f2)},
         {"word", str(c.word)},
         {"kappa", str(c.kappa)},
         {"unsigned_part", str(c.unsigned_part)},
         {"s", c.s},
         {"r_prime", c.r_prime},
         {"r0", c.r0},
         {"shape", c.shape},
         {"fallback_used", c.fallback_used},
         {"log", log}},
        s);
}

void cmd_d1(const Config& cfg) {
  auto L = load(cfg);
  large::ArtinGroup G(L.pres, L.order);
  auto B = oracle::Ball::from_engine(G, cfg.radius);
  auto res = sweeps::d1_scan(G, B, L.id, cfg.threads, cfg.allow_counterexample);
  if (cfg.json && cfg.out_dir.empty()) {
    std::cout << res.json();
    return;
  }
  emit(cfg, "d1_" + L.id + ".csv", sweeps::to_csv(res.rows()));
  if (!cfg.out_dir.empty()) emit(cfg, "d1_" + L.id + ".json", res.json());
}

void cmd_d2(const Config& cfg) {
  auto L = load(cfg);
  large::ArtinGroup G(L.pres, L.order);
  auto B = oracle::Ball::from_engine(G, cfg.radius);
  std::optional<oracle::Oracle> O;
  if (!cfg.no_oracle) O.emplace(L.pres, L.order);
  sweeps::D2Options opt;
  opt.oracle = O ? &*O : nullptr;
  opt.threads = cfg.threads;
  opt.allow_counterexample = cfg.allow_counterexample;
  auto res = sweeps::d2_scan(G, B, L.id, opt);
  if (cfg.json && cfg.out_dir.empty()) {
    std::cout << res.json();
  } else {
    emit(cfg, "d2_" + L.id + ".csv", sweeps::to_csv(res.rows()));
    if (!cfg.out_dir.empty()) emit(cfg, "d2_" + L.id + ".json", res.json());
  }
  if (!res.ok()) throw Error(ErrorKind::PropertyFalsified, "D2 scan found " + std::to_string(res.total_violations) +
                                                               " violations and " +
                                                               std::to_string(res.total_compression_failures) +
                                                               " compression failures");
}

void cmd_rd(const Config& cfg) {
  auto L = load(cfg);
  large::ArtinGroup G(L.pres, L.order);
  auto B = oracle::Ball::from_engine(G, cfg.radius);
  sweeps::RdCheckOptions opt;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  auto res = sweeps::rd_check(G, B, L.id, opt);
  if (cfg.json && cfg.out_dir.empty()) {
    std::cout << res.json();
  } else {
    emit(cfg, "rd_l2_" + L.id + ".csv", sweeps::to_csv(res.l2_rows()));
    emit(cfg, "rd_star_" + L.id + ".csv", res.star_star_csv());
    if (!cfg.out_dir.empty()) emit(cfg, "rd_" + L.id + ".json", res.json());
  }
  if (!res.ok()) throw Error(ErrorKind::PropertyFalsified, "harmonic checks failed");
}

void cmd_repro(const Config& cfg) {
  auto res = sweeps::reproduce_examples();
  if (cfg.out_dir.empty()) {
    std::cout << (cfg.json ? res.json() : res.text());
  } else {
    emit(cfg, "repro.txt", res.text());
    emit(cfg, "repro.json", res.json());
  }
  if (!res.ok()) throw Error(ErrorKind::PropertyFalsified, "a worked example failed");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Normal forms, divisors, merging and rapid-decay sweeps for Artin groups of large type"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--preset", cfg.preset, "Built-in presentation: DA3 DA4 DA5 DAinf tri345 tri444 tri555 tri433");
  app.add_option("--presentation", cfg.presentation_file, "Presentation JSON file (overrides --preset)");
  app.add_option("--order", cfg.order, "Letter order, smallest first, e.g. aAbBcC");
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--seed", cfg.seed, "Seed for randomized trials");
  app.add_option("--threads", cfg.threads, "Worker threads for sweeps");
  app.add_option("--out", cfg.out_dir, "Directory for sweep artifacts");
  app.add_flag("--allow-counterexample", cfg.allow_counterexample,
               "Run guarded engines on presentations failing the (3,3,m)-hypothesis");

  std::string w1, w2;
  int i = 0, j = 0, R = 0;
  auto* nf = app.add_subcommand("nf", "Shortlex normal form with reduction log");
  nf->add_option("word", w1)->required();
  auto* geo = app.add_subcommand("geodesic", "Geodesic test and all geodesic spellings");
  geo->add_option("word", w1)->required();
  auto* ball = app.add_subcommand("ball", "Cayley ball sphere sizes");
  ball->add_option("radius", R)->required();
  auto* div = app.add_subcommand("divisors", "LD, RD and LD' in G(i,j)");
  div->add_option("word", w1)->required();
  div->add_option("i", i)->required();
  div->add_option("j", j)->required();
  auto* merge = app.add_subcommand("merge", "Merger (f1, Delta^r, f2) of two elements");
  merge->add_option("g1", w1)->required();
  merge->add_option("g2", w2)->required();
  auto* comp = app.add_subcommand("compress", "Merge then compress inside a two-generator subgroup");
  comp->add_option("g1", w1)->required();
  comp->add_option("g2", w2)->required();
  auto* d1 = app.add_subcommand("d1-scan", "F_{P,k,l} table over a ball");
  d1->add_option("--radius", cfg.radius, "Ball radius");
  auto* d2 = app.add_subcommand("d2-scan", "Merger, S/T and compression checks over a ball");
  d2->add_option("--radius", cfg.radius, "Ball radius");
  d2->add_flag("--no-oracle", cfg.no_oracle, "Skip oracle confirmation of compressed words");
  auto* rd = app.add_subcommand("rd-check", "Projection inequalities, (**) ratio tables, convolution support");
  rd->add_option("--radius", cfg.radius, "Ball radius");
  rd->add_option("--trials", cfg.trials, "Random functions per (k,p)");
  auto* repro = app.add_subcommand("repro-paper", "Run the fixed worked examples");

  CLI11_PARSE(app, argc, argv);
  try {
    if (nf->parsed()) cmd_nf(cfg, w1);
    else if (geo->parsed()) cmd_geodesic(cfg, w1);
    else if (ball->parsed()) cmd_ball(cfg, R);
    else if (div->parsed()) cmd_divisors(cfg, w1, i, j);
    else if (merge->parsed()) cmd_merge(cfg, w1, w2);
    else if (comp->parsed()) cmd_compress(cfg, w1, w2);
    else if (d1->parsed()) cmd_d1(cfg);
    else if (d2->parsed()) cmd_d2(cfg);
    else if (rd->parsed()) cmd_rd(cfg);
    else if (repro->parsed()) cmd_repro(cfg);
  } catch (const Error& e) {
    std::cout << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
  return 0;
}
