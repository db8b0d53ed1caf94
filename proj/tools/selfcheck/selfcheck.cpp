// Copyright 2026 The conetype Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "selfcheck/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "conetype/ball.hpp"
#include "conetype/cone_matrix.hpp"
#include "conetype/cone_oracle.hpp"
#include "conetype/cone_types.hpp"
#include "conetype/error.hpp"
#include "conetype/matrix_io.hpp"
#include "conetype/matrix_system.hpp"
#include "conetype/mult_functions.hpp"

namespace conetype::selfcheck {

namespace {

// The classical genus-2 table, in order.
constexpr const char* kTable[] = {
    "B",    "a",    "d",    "C",    "D",    "c",    "b",    "A",    "Bc",   "BA",
    "ab",   "aB",   "dC",   "dc",   "CD",   "Cb",   "Da",   "DC",   "cd",   "cD",
    "bA",   "ba",   "AB",   "Ad",   "Bcd",  "BAd",  "abA",  "aBA",  "dCD",  "dcD",
    "CDa",  "Cba",  "Dab",  "DCb",  "cdC",  "cDC",  "bAB",  "baB",  "ABc",  "Adc",
    "BcdC", "abAB", "dCDa", "CDab", "DabA", "cdCD", "bABc", "ABcd"};

std::string join_counts(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "/" : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> length_histogram(const ConeTypeTable& t) {
  std::vector<int> h(t.group().relators().half_length(), 0);
  for (const Word& w : t.representatives()) ++h[w.size() - 1];
  return h;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Random element of length at most max_len: a random freely reduced word
// of random length, normalised.
GroupElement random_element(const SurfaceGroup& g, std::mt19937_64& rng, int max_len) {
  const int len = static_cast<int>(draw(rng, max_len + 1));
  Word w;
  while (static_cast<int>(w.size()) < len) {
    Generator a(static_cast<int>(draw(rng, g.generator_count())));
    if (!w.empty() && a == g.alphabet().inverse(w.back())) continue;
    w.push_back(a);
  }
  return g.normal_form(w);
}

// Random geodesic word (not necessarily a normal form) of length len.
Word random_geodesic_word(const SurfaceGroup& g, std::mt19937_64& rng, int len) {
  Word w;
  GeneratorMask mask = 0;
  const Alphabet& al = g.alphabet();
  while (static_cast<int>(w.size()) < len) {
    Generator a(static_cast<int>(draw(rng, g.generator_count())));
    if (mask_has(mask, al.inverse(a))) continue;
    w.push_back(a);
    mask = g.analyze_geodesic(w).last_letters;
  }
  return w;
}

Ball build_ball_with_fallback(const SurfaceGroup& g, int radius, int fallback,
                              const Options& opt, std::string& note) {
  try {
    return Ball::build(g, radius, BallOptions{opt.max_ball});
  } catch (const ResourceError& e) {
    note = " (radius " + std::to_string(fallback) + " fallback: " + e.what() + ")";
    return Ball::build(g, fallback, BallOptions{opt.max_ball});
  }
}

void check_enumeration(const Options&, Result& r) {
  SurfaceGroup g2(Genus(2));
  ConeTypeTable t(g2);
  std::set<Word> expected, got(t.representatives().begin(), t.representatives().end());
  bool order = t.size() == 48;
  for (int i = 0; i < 48; ++i) {
    Word w = g2.parse(kTable[i]);
    expected.insert(w);
    if (order && t.representative(i + 1) != w) order = false;
  }
  std::vector<int> h = length_histogram(t);
  bool ok = t.size() == 48 && h == std::vector<int>{8, 16, 16, 8} && got == expected;
  std::ostringstream d;
  d << "g=2: " << t.size() << " reps " << join_counts(h) << (got == expected ? ", set" : ", SET DIFFERS")
    << (order ? " and order" : "") << " match the table";
  for (int gv : {3, 4}) {
    SurfaceGroup g(Genus{gv});
    ConeTypeTable tg(g);
    std::vector<int> hg = length_histogram(tg);
    std::vector<int> want(2 * gv, 8 * gv);
    want.front() = want.back() = 4 * gv;
    ok = ok && tg.size() == 8 * gv * (2 * gv - 1) && hg == want;
    d << "; g=" << gv << ": " << tg.size();
  }
  r.passed = ok;
  r.detail = d.str();
}

bool emme_pattern(const ConeMatrix& m) {
  if (!m.block_is_identity(3, 2)) return false;
  for (auto [i, j] : {std::pair{3, 1}, {3, 3}, {3, 4}, {4, 1}, {4, 2}, {4, 4}}) {
    if (!m.block_is_zero(i, j)) return false;
  }
  return true;
}

void check_matrix_fidelity(const Options& opt, Result& r) {
  SurfaceGroup g(Genus(2));
  ConeTypeTable t(g);
  ConeMatrix m = build_matrix(t);
  ConeMatrix ref = read_blocks_file(opt.fixture, genus2_class_starts());
  DiffReport diff = compare_matrices(m, ref);
  const bool pattern = emme_pattern(m) && emme_pattern(ref);
  r.passed = diff.empty() && pattern;
  std::ostringstream d;
  d << "block pattern " << (pattern ? "ok" : "BROKEN") << "; " << diff.entries.size()
    << " entry difference(s) vs reference";
  for (const DiffEntry& e : diff.entries) {
    d << " (" << e.row << "," << e.column << "): computed " << e.computed << " reference "
      << e.reference << ";";
  }
  r.detail = d.str();
}

void check_primitivity(const Options&, Result& r) {
  SurfaceGroup g(Genus(2));
  ConeTypeTable t(g);
  ConeMatrix m = build_matrix(t);
  PrimitivityCertificate c = primitivity_certificate(m);
  std::ostringstream d;
  d << "M^1 positive: " << (c.first_power.positive ? "yes" : "no") << "; stages";
  for (const PrimitivityStage& s : c.stages) {
    d << " M^" << s.power << "[1.." << s.rows << "]=" << (s.positive ? "pos" : "ZERO");
  }
  d << "; exponent " << (c.exponent ? std::to_string(*c.exponent) : "none");
  r.passed = c.holds() && c.exponent == 5 && c.stages.size() == 4 && !c.first_power.positive;
  r.detail = d.str();
}

void check_perron(const Options& opt, Result& r) {
  SurfaceGroup g(Genus(2));
  ConeTypeTable t(g);
  ConeMatrix m = build_matrix(t);
  PerronOptions po;
  po.tol = 1e-12;
  po.seed = opt.seed;
  SpectralResult s = perron(m, po);
  std::string note;
  Ball ball = build_ball_with_fallback(g, 7, 6, opt, note);
  auto spheres = ball.sphere_sizes();
  const int n = ball.radius();
  const double ratio = static_cast<double>(spheres[n]) / static_cast<double>(spheres[n - 1]);
  auto positive = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x > 0; });
  };
  const double rel = std::abs(s.r - ratio) / ratio;
  r.passed = s.residual <= 1e-10 && s.left_residual <= 1e-10 && positive(s.right_vector) &&
             positive(s.left_vector) && s.restart_difference <= 1e-8 &&
             std::abs(s.left_r - s.r) <= 1e-10 * s.r && rel <= 0.05;
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "r=%.12f left r=%.12f residual %.1e/%.1e, restart diff %.1e, s(%d)/s(%d)=%.6f "
                "rel err %.2e%s",
                s.r, s.left_r, s.residual, s.left_residual, s.restart_difference, n, n - 1, ratio,
                rel, note.c_str());
  r.detail = buf;
}

void check_classification(const Options& opt, Result& r) {
  SurfaceGroup g(Genus(2));
  ConeTypeTable t(g);
  OracleClassifier oracle(t, 4);
  Ball ball = Ball::build(g, 5, BallOptions{opt.max_ball});
  std::size_t mismatches = 0, checked = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    GroupElement x = g.normal_form(ball.word(i));
    if (t.classify(x) != oracle.classify(x)) ++mismatches;
    ++checked;
  }
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < 10000; ++k) {
    GroupElement x = random_element(g, rng, 7);
    if (t.classify(x) != oracle.classify(x)) ++mismatches;
    ++checked;
  }
  const std::pair<const char*, const char*> examples[] = {
      {"bc", "c"}, {"aba", "ba"}, {"abcd", "cd"}, {"dcDCAdc", "BAdc"}};
  int ex_ok = 0;
  for (auto [x, rep] : examples) {
    GroupElement e = g.element(x);
    auto want = t.id_of(g.parse(rep));
    if (want && t.classify(e) == *want && oracle.classify(e) == *want) ++ex_ok;
  }
  r.passed = mismatches == 0 && ex_ok == 4;
  r.detail = std::to_string(checked) + " elements (radius-5 ball + 10^4 random), " +
             std::to_string(mismatches) + " mismatches; examples " + std::to_string(ex_ok) +
             "/4; oracle depth " + std::to_string(oracle.depth());
}

void check_growth(const Options& opt, Result& r) {
  SurfaceGroup g(Genus(2));
  ConeTypeTable t(g);
  ConeMatrix m = build_matrix(t);
  std::string note;
  Ball ball = build_ball_with_fallback(g, 7, 6, opt, note);
  auto spheres = ball.sphere_sizes();
  auto rows = growth_counts(t, m, ball.radius());
  bool ok = rows.size() == spheres.size();
  std::ostringstream d;
  d << "s(n):";
  for (std::size_t n = 0; ok && n < rows.size(); ++n) {
    std::uint64_t words = 0;
    for (std::size_t i = ball.sphere_begin(static_cast<int>(n)); i < ball.sphere_end(static_cast<int>(n)); ++i) {
      words += ball.geodesic_count(i);
    }
    ok = ok && rows[n].elements == mpz_class(std::to_string(spheres[n])) &&
         rows[n].words == mpz_class(std::to_string(words));
    d << " " << rows[n].elements.get_str();
  }
  ok = ok && spheres.size() > 2 && spheres[0] == 1 && spheres[1] == 8 && spheres[2] == 56;
  d << " (automaton = BFS, geodesic word counts also agree)" << note;
  r.passed = ok;
  r.detail = d.str();
}

void check_geodesics(const Options& opt, Result& r) {
  SurfaceGroup g(Genus(2));
  std::string note;
  Ball ball = build_ball_with_fallback(g, 7, 6, opt, note);
  std::size_t bad_counts = 0, compared = 0, occurrences = 0, overlap_failures = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    GroupElement y = g.normal_form(ball.word(i));
    if (ball.distance(i) <= 6) {
      ++compared;
      if (g.geodesic_class(y).size() != ball.geodesic_count(i)) ++bad_counts;
    }
    try {
      occurrences += quadruple_occurrences(g, y).size();
    } catch (const VerificationError&) {
      ++overlap_failures;
    }
  }
  std::vector<Word> cls = g.geodesic_class(g.parse("abABAdc"));
  std::set<Word> want{g.parse("abABAdc"), g.parse("dcDCAdc"), g.parse("abAABcd")};
  const bool remark = cls.size() == 3 && std::set<Word>(cls.begin(), cls.end()) == want;
  r.passed = bad_counts == 0 && remark && overlap_failures == 0;
  r.detail = std::to_string(compared) + " elements |y|<=6, " + std::to_string(bad_counts) +
             " class/BFS count mismatches; abABAdc has " + std::to_string(cls.size()) +
             " geodesics; " + std::to_string(occurrences) + " quadruple occurrences up to radius " +
             std::to_string(ball.radius()) + ", " + std::to_string(overlap_failures) +
             " overlap violations" + note;
}

Vector<mpq_class> random_vector(std::mt19937_64& rng, int dim) {
  Vector<mpq_class> v(dim);
  for (auto& x : v) {
    x = mpq_class(static_cast<long>(draw(rng, 9)) - 4, 1 + draw(rng, 3));
    x.canonicalize();
  }
  return v;
}

void check_mult_functions(const Options& opt, Result& r) {
  SurfaceGroup g(Genus(2));
  ConeTypeTable t(g);
  Ball ball = Ball::build(g, 6, BallOptions{opt.max_ball});
  const Alphabet& al = g.alphabet();
  std::vector<GroupElement> elems;
  for (std::size_t i = 0; i < ball.size(); ++i) elems.push_back(g.normal_form(ball.word(i)));

  std::size_t evaluations = 0, disagreements = 0;
  const DimsProfile profiles[] = {DimsProfile::scalar(4), DimsProfile{{2, 1, 1, 3}}};
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < 10; ++k) {
    RationalSystem sys = random_system(t, profiles[k % 2], opt.seed + k);
    GroupElement b = g.generator(al.ordered()[k % 8]);
    MultFunc<mpq_class> f(t, g.identity(), b, random_vector(rng, sys.dim(t.classify(b))));
    for (const GroupElement& z : elems) {
      if (!in_cone(g, g.identity(), b, z)) continue;
      auto v1 = eval_recursive(f, sys, z);
      auto v2 = eval_geodesic_sum(f, sys, z);
      auto v3 = eval_matrix_form(f, sys, z);
      ++evaluations;
      if (v1 != v2 || v2 != v3) ++disagreements;
    }
  }

  // Translation: translate(f, gamma)(gamma z) = f(z).
  std::size_t translation_failures = 0;
  {
    RationalSystem sys = random_system(t, profiles[1], opt.seed + 100);
    for (int k = 0; k < 200; ++k) {
      GroupElement x = random_element(g, rng, 3);
      GroupElement y = g.multiply(x, random_element(g, rng, 2));
      if (x == y) continue;
      MultFunc<mpq_class> f(t, x, y, random_vector(rng, sys.dim(t.classify(g.multiply(g.inverse(x), y)))));
      GroupElement gamma = random_element(g, rng, 4);
      GroupElement z = g.multiply(y, random_element(g, rng, 3));
      auto lhs = eval_recursive(f.translate(gamma), sys, g.multiply(gamma, z));
      auto rhs = eval_recursive(f, sys, z);
      if (lhs != rhs) ++translation_failures;
    }
  }

  // The all-ones scalar system counts geodesics from b to z.
  std::size_t count_failures = 0;
  {
    RationalSystem ones = ones_system(t);
    GroupElement b = g.element("b");
    MultFunc<mpq_class> f(t, g.identity(), b, {mpq_class(1)});
    for (const GroupElement& z : elems) {
      if (!in_cone(g, g.identity(), b, z) || z.length() > 5) continue;
      auto idx = ball.find(g.multiply(g.inverse(b), z));
      auto v = eval_recursive(f, ones, z);
      if (!idx || v.size() != 1 || v[0] != mpq_class(std::to_string(ball.geodesic_count(*idx)))) {
        ++count_failures;
      }
    }
  }
  r.passed = disagreements == 0 && translation_failures == 0 && count_failures == 0 &&
             evaluations > 0;
  r.detail = std::to_string(evaluations) + " exact evaluations x3 over 10 systems, " +
             std::to_string(disagreements) + " disagreements; translation failures " +
             std::to_string(translation_failures) + "/200; all-ones count failures " +
             std::to_string(count_failures);
}

void check_lemmas(const Options& opt, Result& r) {
  SurfaceGroup g(Genus(2));
  ConeTypeTable t(g);
  ConeOracle oracle(g, 4, BallOptions{opt.max_ball});
  std::mt19937_64 rng(opt.seed);
  std::size_t nesting_failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const int len = 1 + static_cast<int>(draw(rng, 6));
    Word w = random_geodesic_word(g, rng, len);
    std::vector<std::uint32_t> prev;
    for (int i = 0; i < len; ++i) {
      Fingerprint f = oracle.fingerprint(g.normal_form(w.subword(i)));
      if (i > 0 && !std::includes(f.members.begin(), f.members.end(), prev.begin(), prev.end())) {
        ++nesting_failures;
      }
      prev = std::move(f.members);
    }
  }
  std::set<Fingerprint> fps;
  for (ConeTypeId id = 1; id <= t.size(); ++id) {
    fps.insert(oracle.fingerprint(g.normal_form(t.representative(id))));
  }
  const bool distinct = fps.size() == static_cast<std::size_t>(t.size());
  GroupElement witness = g.element("BAd");
  auto wi = oracle.ball().find(witness);
  Fingerprint fa = oracle.fingerprint(g.element("a"));
  Fingerprint fba = oracle.fingerprint(g.element("ba"));
  auto has = [&](const Fingerprint& f) {
    return wi && std::binary_search(f.members.begin(), f.members.end(), *wi);
  };
  const bool witness_ok = cone_membership(g, g.element("a"), witness) &&
                          !cone_membership(g, g.element("ba"), witness) && has(fa) && !has(fba);
  r.passed = nesting_failures == 0 && distinct && witness_ok;
  r.detail = "nesting failures " + std::to_string(nesting_failures) + "/1000 words; " +
             std::to_string(fps.size()) + " distinct depth-4 fingerprints of 48; BAd in C(a)\\C(ba): " +
             (witness_ok ? "yes" : "no");
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "cone-type enumeration", 1.0, check_enumeration},
      {2, "matrix fidelity", 1.0, check_matrix_fidelity},
      {3, "primitivity staging", 1.0, check_primitivity},
      {4, "perron properties", 10.0, check_perron},
      {5, "automaton vs oracle classification", 120.0, check_classification},
      {6, "growth equivalence", 30.0, check_growth},
      {7, "geodesic machinery", 120.0, check_geodesics},
      {8, "multiplicative-function equivalence", 300.0, check_mult_functions},
      {9, "lemma-level properties", 60.0, check_lemmas},
  };
  return all;
}

Result run_one(const Criterion& c, const Options& options) {
  Result r;
  r.id = c.id;
  r.name = c.name;
  r.limit_seconds = c.limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(options, r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds >= r.limit_seconds) {
    r.passed = false;
    r.detail += "; exceeded time limit";
  }
  return r;
}

std::string format_line(const Result& r) {
  char head[128];
  std::snprintf(head, sizeof head, "%s [%d] %-38s %8.2fs (limit %gs)  ", r.passed ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.seconds, r.limit_seconds);
  return head + r.detail;
}

}  // namespace conetype::selfcheck
