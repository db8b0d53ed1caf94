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

// conetype: command-line front end to the cone-type library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "conetype/ball.hpp"
#include "conetype/cone_matrix.hpp"
#include "conetype/cone_oracle.hpp"
#include "conetype/cone_types.hpp"
#include "conetype/error.hpp"
#include "conetype/matrix_io.hpp"
#include "conetype/matrix_system.hpp"
#include "conetype/mult_functions.hpp"
#include "selfcheck/selfcheck.hpp"

#ifndef CONETYPE_DEFAULT_FIXTURE
#define CONETYPE_DEFAULT_FIXTURE "reference_blocks.txt"
#endif

namespace {

using namespace conetype;
using json = nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kResource = 3, kVerification = 4 };

struct Config {
  int genus = 2;
  int radius = 4;
  double tol = 1e-12;
  int max_iter = 100000;
  std::uint64_t seed = 1;
  std::string format = "json";
  bool exact = false;
  bool experimental = false;
  bool oracle = false;
  std::string fixture = CONETYPE_DEFAULT_FIXTURE;
  std::uint64_t max_ball = 20'000'000;
};

std::uint64_t max_ball_from_env() {
  const char* env = std::getenv("CONETYPE_MAX_BALL");
  if (!env || !*env) return 20'000'000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw ParseError(std::string("invalid CONETYPE_MAX_BALL '") + env + "'");
  return v;
}

struct Session {
  explicit Session(const Config& c)
      : cfg(c), group(Genus(c.genus)),
        table(group, c.experimental ? CascadeMode::experimental : CascadeMode::standard) {}

  const OracleClassifier& oracle() {
    if (!oracle_) oracle_ = std::make_unique<OracleClassifier>(table, 4, 7, BallOptions{cfg.max_ball});
    return *oracle_;
  }
  ConeTypeId classify(const GroupElement& x) {
    if (cfg.oracle || !table.cascade_available()) return oracle().classify(x);
    return table.classify(x);
  }
  ConeMatrix matrix() {
    if (cfg.oracle || !table.cascade_available()) return build_matrix(table, oracle());
    return build_matrix(table);
  }
  std::string fmt(const Word& w) const { return w.empty() ? "e" : group.format(w); }
  GroupElement element(const std::string& text) const {
    return text == "e" ? group.identity() : group.element(text);
  }

  const Config& cfg;
  SurfaceGroup group;
  ConeTypeTable table;

 private:
  std::unique_ptr<OracleClassifier> oracle_;
};

void emit(const Config& cfg, const json& j, const std::string& text) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw DomainError("format '" + cfg.format + "' not supported here (use " + list + ")");
}

int cmd_normalize(Session& s, const std::string& word) {
  require_format(s.cfg, {"json", "text"});
  GroupElement x = word == "e" ? s.group.identity() : s.group.normal_form(s.group.parse(word));
  emit(s.cfg, {{"input", word}, {"normal_form", s.group.format(x.word())}, {"length", x.length()}},
       s.fmt(x.word()) + "\n");
  return kOk;
}

int cmd_distance(Session& s, const std::string& a, const std::string& b) {
  require_format(s.cfg, {"json", "text"});
  GroupElement x = b.empty() ? s.group.identity() : s.element(a);
  GroupElement y = b.empty() ? s.element(a) : s.element(b);
  int d = s.group.distance(x, y);
  emit(s.cfg, {{"from", s.fmt(x.word())}, {"to", s.fmt(y.word())}, {"distance", d}},
       std::to_string(d) + "\n");
  return kOk;
}

int cmd_geodesics(Session& s, const std::string& word) {
  require_format(s.cfg, {"json", "text"});
  GroupElement y = s.element(word);
  std::vector<Word> words =
      s.cfg.oracle ? enumerate_geodesics(s.group, y) : s.group.geodesic_class(y);
  json list = json::array();
  std::string text;
  for (const Word& w : words) {
    list.push_back(s.fmt(w));
    text += s.fmt(w) + "\n";
  }
  json quads = json::array();
  for (const auto& q : quadruple_occurrences(s.group, y)) {
    quads.push_back({{"word", s.fmt(q.word)}, {"position", q.position}, {"quadruple", s.fmt(q.quadruple)}});
  }
  emit(s.cfg,
       {{"element", s.fmt(y.word())}, {"count", words.size()}, {"geodesics", list},
        {"quadruples", quads}},
       text);
  return kOk;
}

int cmd_conetype(Session& s, const std::string& word) {
  require_format(s.cfg, {"json", "text"});
  GroupElement x = s.element(word);
  ConeTypeId id = s.classify(x);
  std::string rep = id == 0 ? "e" : s.fmt(s.table.representative(id));
  emit(s.cfg,
       {{"element", s.fmt(x.word())}, {"id", id}, {"representative", rep},
        {"length_class", s.table.length_class(id)}},
       std::to_string(id) + " " + rep + "\n");
  return kOk;
}

int cmd_table(Session& s) {
  require_format(s.cfg, {"json", "text"});
  std::ostringstream os;
  const bool succ = s.table.cascade_available();
  for (ConeTypeId id = 1; id <= s.table.size(); ++id) {
    os << id << "\t" << s.fmt(s.table.representative(id));
    if (succ) {
      os << "\t";
      for (Generator a : s.group.alphabet().ordered()) {
        auto n = s.table.successor(id, a);
        os << " " << s.group.alphabet().format(a) << ":" << (n ? std::to_string(*n) : "-");
      }
    }
    os << "\n";
  }
  emit(s.cfg, s.table.to_json(), os.str());
  return kOk;
}

int cmd_matrix(Session& s) {
  require_format(s.cfg, {"json", "csv", "blocks", "paper-blocks"});
  ConeMatrix m = s.matrix();
  if (s.cfg.format == "json") {
    std::cout << json{{"order", m.order()}, {"column_sums", m.column_sums()}, {"rows", matrix_to_json(m)}}.dump()
              << "\n";
  } else if (s.cfg.format == "csv") {
    write_csv(std::cout, m);
  } else {
    if (s.group.genus().value() != 2) throw DomainError("block layout is defined for genus 2");
    write_blocks(std::cout, m);
  }
  return kOk;
}

int cmd_verify(Session& s) {
  require_format(s.cfg, {"json", "text"});
  if (s.group.genus().value() != 2) throw DomainError("the reference matrix is for genus 2");
  ConeMatrix m = s.matrix();
  ConeMatrix ref = read_blocks_file(s.cfg.fixture, genus2_class_starts());
  DiffReport d = compare_matrices(m, ref);
  json entries = json::array();
  for (const DiffEntry& e : d.entries) {
    entries.push_back({{"row", e.row}, {"column", e.column}, {"computed", e.computed}, {"reference", e.reference}});
  }
  emit(s.cfg, {{"fixture", s.cfg.fixture}, {"agrees", d.empty()}, {"differences", entries}},
       d.to_string());
  return d.empty() ? kOk : kVerification;
}

int cmd_primitivity(Session& s) {
  require_format(s.cfg, {"json", "text"});
  ConeMatrix m = s.matrix();
  PrimitivityCertificate c = primitivity_certificate(m);
  json stages = json::array();
  std::ostringstream os;
  for (const PrimitivityStage& st : c.stages) {
    json js{{"power", st.power}, {"rows", st.rows}, {"positive", st.positive}};
    if (st.first_zero) js["first_zero"] = {st.first_zero->first, st.first_zero->second};
    stages.push_back(js);
    os << "M^" << st.power << " rows 1.." << st.rows << ": " << (st.positive ? "positive" : "has zeros") << "\n";
  }
  os << "exponent: " << (c.exponent ? std::to_string(*c.exponent) : "none") << "\n";
  emit(s.cfg,
       {{"exponent", c.exponent ? json(*c.exponent) : json(nullptr)},
        {"first_power_positive", c.first_power.positive}, {"stages", stages}, {"holds", c.holds()}},
       os.str());
  return c.exponent ? kOk : kVerification;
}

int cmd_perron(Session& s) {
  require_format(s.cfg, {"json", "text"});
  ConeMatrix m = s.matrix();
  SpectralResult r = perron(m, PerronOptions{s.cfg.tol, s.cfg.max_iter, s.cfg.seed});
  std::ostringstream os;
  os.precision(15);
  os << "r = " << r.r << "\niterations = " << r.iterations << "\nresidual = " << r.residual
     << "\nrestart difference = " << r.restart_difference << "\n";
  emit(s.cfg,
       {{"r", r.r}, {"left_r", r.left_r}, {"residual", r.residual}, {"left_residual", r.left_residual},
        {"iterations", r.iterations}, {"restart_difference", r.restart_difference},
        {"right_vector", r.right_vector}, {"left_vector", r.left_vector}},
       os.str());
  return kOk;
}

int cmd_growth(Session& s, int n) {
  require_format(s.cfg, {"json", "text", "csv"});
  ConeMatrix m = s.matrix();
  auto rows = growth_counts(s.table, m, n);
  json j = json::array();
  std::ostringstream os;
  if (s.cfg.format == "csv") os << "n,elements,geodesic_words\n";
  for (const GrowthRow& r : rows) {
    j.push_back({{"n", r.n}, {"elements", r.elements.get_str()}, {"geodesic_words", r.words.get_str()}});
    if (s.cfg.format == "csv") {
      os << r.n << "," << r.elements.get_str() << "," << r.words.get_str() << "\n";
    } else {
      os << r.n << "\t" << r.elements.get_str() << "\t" << r.words.get_str() << "\n";
    }
  }
  emit(s.cfg, j, os.str());
  return kOk;
}

std::vector<mpq_class> parse_vector(const std::string& text) {
  std::vector<mpq_class> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" "));
    item.erase(item.find_last_not_of(" ") + 1);
    if (!item.empty()) v.push_back(parse_rational(item));
  }
  return v;
}

template <class T>
json vector_json(const Vector<T>& v) {
  json j = json::array();
  for (const T& x : v) {
    if constexpr (std::is_same_v<T, double>) {
      j.push_back(x);
    } else {
      j.push_back(x.get_str());
    }
  }
  return j;
}

template <class T>
json evaluate_all(const MultFunc<T>& f, const MatrixSystem<T>& sys, const GroupElement& z,
                  const std::string& method) {
  json out = json::object();
  if (method == "recursive" || method == "all") out["recursive"] = vector_json(eval_recursive(f, sys, z));
  if (method == "geodesic" || method == "all") out["geodesic_sum"] = vector_json(eval_geodesic_sum(f, sys, z));
  if (method == "matrix" || method == "all") out["matrix_form"] = vector_json(eval_matrix_form(f, sys, z));
  return out;
}

int cmd_mu(Session& s, const std::string& file, const std::string& xs, const std::string& ys,
           const std::string& zs, const std::string& vs, const std::string& method) {
  require_format(s.cfg, {"json"});
  std::ifstream in(file);
  if (!in) throw Error("cannot open system file '" + file + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("system file: ") + e.what(), e.byte);
  }
  RationalSystem sys = system_from_json(s.table, j);
  GroupElement x = s.element(xs);
  GroupElement y = s.element(ys);
  GroupElement z = s.element(zs);
  std::vector<mpq_class> v = parse_vector(vs);
  MultFunc<mpq_class> f(s.table, x, y, v);
  json out{{"x", s.fmt(x.word())}, {"y", s.fmt(y.word())}, {"z", s.fmt(z.word())}, {"type", f.type()},
           {"in_cone", in_cone(s.group, x, y, z)}, {"exact", s.cfg.exact}};
  if (s.cfg.exact) {
    out["values"] = evaluate_all(f, sys, z, method);
  } else {
    FloatSystem fs = sys.convert<double>();
    std::vector<double> vd;
    for (const auto& q : v) vd.push_back(q.get_d());
    out["values"] = evaluate_all(MultFunc<double>(s.table, x, y, vd), fs, z, method);
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_random_system(Session& s, const std::string& dims, bool ones) {
  require_format(s.cfg, {"json"});
  RationalSystem sys = [&]() {
    if (ones) return ones_system(s.table);
    DimsProfile p;
    std::stringstream ss(dims);
    std::string item;
    while (std::getline(ss, item, ',')) p.per_class.push_back(std::stoi(item));
    return random_system(s.table, p, s.cfg.seed);
  }();
  std::cout << system_to_json(sys).dump() << "\n";
  return kOk;
}

int cmd_ball(Session& s) {
  require_format(s.cfg, {"json", "text", "dot"});
  Ball b = Ball::build(s.group, s.cfg.radius, BallOptions{s.cfg.max_ball});
  if (s.cfg.format == "dot") {
    b.write_dot(std::cout, s.group.alphabet());
    return kOk;
  }
  std::ostringstream os;
  auto sizes = b.sphere_sizes();
  for (std::size_t n = 0; n < sizes.size(); ++n) os << n << "\t" << sizes[n] << "\n";
  emit(s.cfg, {{"radius", b.radius()}, {"sphere_sizes", sizes}, {"elements", b.size()}}, os.str());
  return kOk;
}

int cmd_selfcheck(const Config& cfg, int only) {
  selfcheck::Options opt;
  opt.fixture = cfg.fixture;
  opt.max_ball = cfg.max_ball;
  bool all = true;
  for (const auto& c : selfcheck::criteria()) {
    if (only && c.id != only) continue;
    selfcheck::Result r = selfcheck::run_one(c, opt);
    std::cout << selfcheck::format_line(r) << std::endl;
    all = all && r.passed;
  }
  return all ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cone types, growth and multiplicative functions for surface groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--genus", cfg.genus, "Surface genus (>= 2)")->capture_default_str();
  app.add_option("--format", cfg.format, "json, text, csv, dot or blocks")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random choices")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Power-iteration tolerance")->capture_default_str();
  app.add_option("--radius", cfg.radius, "Ball radius")->capture_default_str();
  app.add_option("--fixture", cfg.fixture, "Reference matrix in block layout")->capture_default_str();
  app.add_flag("--exact", cfg.exact, "Exact rational evaluation");
  app.add_flag("--oracle", cfg.oracle, "Use the brute-force oracle instead of the automaton");
  app.add_flag("--experimental", cfg.experimental, "Allow the suffix cascade for genus > 2");

  std::string word, word2, file, xs = "e", ys, zs, vs = "1", method = "all", dims = "1,1,1,1";
  int growth_n = 7, only = 0;
  bool ones = false;
  auto* normalize = app.add_subcommand("normalize", "Shortlex geodesic normal form");
  normalize->add_option("word", word)->required();
  auto* distance = app.add_subcommand("distance", "Word-metric distance (from e, or between two words)");
  distance->add_option("word", word)->required();
  distance->add_option("other", word2);
  auto* geodesics = app.add_subcommand("geodesics", "All geodesic words of an element");
  geodesics->add_option("word", word)->required();
  auto* conetype = app.add_subcommand("conetype", "Cone-type id and representative");
  conetype->add_option("word", word)->required();
  auto* table = app.add_subcommand("table", "Cone-type representatives and successors");
  auto* matrix = app.add_subcommand("matrix", "Cone-type successor matrix");
  auto* verify = app.add_subcommand("verify", "Compare the matrix with the reference fixture");
  auto* primitivity = app.add_subcommand("primitivity", "Staged positivity of matrix powers");
  auto* perron = app.add_subcommand("perron", "Perron eigenvalue and eigenvectors");
  perron->add_option("--max-iter", cfg.max_iter)->capture_default_str();
  auto* growth = app.add_subcommand("growth", "Sphere sizes from the automaton");
  growth->add_option("n", growth_n)->capture_default_str();
  auto* mu = app.add_subcommand("mu", "Evaluate a multiplicative function");
  mu->add_option("system", file, "Matrix-system JSON file")->required();
  mu->add_option("--x", xs, "Cone base x (e for the identity)")->capture_default_str();
  mu->add_option("--y", ys, "Cone anchor y")->required();
  mu->add_option("--z", zs, "Evaluation point")->required();
  mu->add_option("--vector", vs, "Comma-separated entries of v")->capture_default_str();
  mu->add_option("--method", method, "recursive, geodesic, matrix or all")
      ->check(CLI::IsMember({"recursive", "geodesic", "matrix", "all"}))
      ->capture_default_str();
  auto* random_sys = app.add_subcommand("random-system", "Emit a reproducible random matrix system");
  random_sys->add_option("--dims", dims, "Dimensions per length class")->capture_default_str();
  random_sys->add_flag("--ones", ones, "All-ones scalar system");
  auto* ball = app.add_subcommand("ball", "BFS ball: sphere sizes or DOT graph");
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the acceptance checks");
  selfcheck->add_option("--only", only, "Run a single criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    cfg.max_ball = max_ball_from_env();
    if (cfg.format == "paper-blocks") cfg.format = "blocks";
    if (selfcheck->parsed()) return cmd_selfcheck(cfg, only);
    Session s(cfg);
    if (normalize->parsed()) return cmd_normalize(s, word);
    if (distance->parsed()) return cmd_distance(s, word, word2);
    if (geodesics->parsed()) return cmd_geodesics(s, word);
    if (conetype->parsed()) return cmd_conetype(s, word);
    if (table->parsed()) return cmd_table(s);
    if (matrix->parsed()) return cmd_matrix(s);
    if (verify->parsed()) return cmd_verify(s);
    if (primitivity->parsed()) return cmd_primitivity(s);
    if (perron->parsed()) return cmd_perron(s);
    if (growth->parsed()) return cmd_growth(s, growth_n);
    if (mu->parsed()) return cmd_mu(s, file, xs, ys, zs, vs, method);
    if (random_sys->parsed()) return cmd_random_system(s, dims, ones);
    if (ball->parsed()) return cmd_ball(s);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
