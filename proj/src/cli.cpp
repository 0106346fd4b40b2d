#include "ybe/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ybe/bridge.hpp"
#include "ybe/constructions.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/error.hpp"
#include "ybe/io.hpp"

namespace ybe::cli {

using njson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, std::set<std::string>> kCommandFlags = {
    {"validate", {"--solution", "--brace", "--format", "--selftest"}},
    {"from-brace", {"--brace", "--out", "--format", "--selftest"}},
    {"double-cover", {"--brace", "--out", "--format", "--selftest"}},
    {"retract", {"--solution", "--out", "--format", "--selftest"}},
    {"mpl", {"--solution", "--brace", "--via-solution", "--format", "--selftest"}},
    {"socle", {"--brace", "--format", "--selftest"}},
    {"quotient", {"--brace", "--ideal", "--by-socle", "--out", "--format", "--selftest"}},
    {"ybgroup", {"--solution", "--elements", "--format", "--selftest"}},
    {"iyb-brace", {"--solution", "--out", "--format", "--selftest"}},
    {"product", {"--kind", "--left", "--right", "--eta", "--out", "--format", "--selftest"}},
    {"augbrace", {"-n", "--mpl", "--materialize", "--basis", "--out", "--format", "--selftest"}},
    {"class2", {"--group", "--builtin", "--out", "--format", "--selftest"}},
    {"embed", {"-p", "--group", "--builtin", "--format", "--selftest"}},
    {"enumerate",
     {"--solutions", "--braces", "-n", "--order", "--up-to-iso", "--census", "--jobs", "--format",
      "--selftest"}},
    {"sweep", {"--theorem", "--max-n", "--max-order", "--jobs", "--format", "--selftest"}},
    {"fixtures", {"--list", "--emit", "--out", "--format", "--selftest"}},
};

const std::set<std::string> kValueFlags = {"--solution", "--brace",  "--out",   "--ideal",
                                           "--kind",     "--left",   "--right", "--eta",
                                           "-n",         "--basis",  "--group", "--builtin",
                                           "-p",         "--order",  "--jobs",  "--max-n",
                                           "--max-order", "--theorem", "--emit", "--format"};

Manifest parse_manifest(const std::vector<std::string> &args) {
  if (args.empty()) throw UsageError("missing subcommand");
  Manifest m;
  m.command = args[0];
  auto it = kCommandFlags.find(m.command);
  if (it == kCommandFlags.end()) throw UsageError("unknown subcommand '" + m.command + "'");
  for (size_t i = 1; i < args.size(); ++i) {
    const std::string &flag = args[i];
    if (!it->second.count(flag))
      throw UsageError("unknown flag '" + flag + "' for subcommand '" + m.command + "'");
    std::string value;
    if (kValueFlags.count(flag)) {
      if (i + 1 >= args.size()) throw UsageError("flag '" + flag + "' needs a value");
      value = args[++i];
    }
    m.options.push_back({flag, value});
  }
  std::string format = m.get("--format", "text");
  if (format != "text" && format != "json")
    throw UsageError("--format must be 'text' or 'json'");
  return m;
}

int parse_int(const std::string &s, const std::string &what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw UsageError(what + " expects an integer, got '" + s + "'");
  }
}

void print_text(std::ostream &out, const njson &rep, const std::string &prefix = "") {
  for (auto it = rep.begin(); it != rep.end(); ++it) {
    const njson &v = it.value();
    if (v.is_object()) {
      print_text(out, v, prefix + it.key() + ".");
    } else if (v.is_array()) {
      out << prefix << it.key() << ":";
      for (const auto &e : v) {
        if (e.is_string())
          out << " " << e.get<std::string>();
        else
          out << " " << e.dump();
      }
      out << "\n";
    } else if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (s.find('\n') != std::string::npos) {
        out << prefix << it.key() << ":\n";
        std::istringstream lines(s);
        std::string line;
        while (std::getline(lines, line)) out << "  " << line << "\n";
      } else {
        out << prefix << it.key() << ": " << s << "\n";
      }
    } else {
      out << prefix << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void emit(std::ostream &out, const Manifest &m, const njson &rep) {
  if (m.get("--format", "text") == "json")
    out << rep.dump(2) << "\n";
  else
    print_text(out, rep);
}

void write_output(const Manifest &m, const std::string &content, std::ostream &out) {
  std::string path = m.get("--out");
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ValidationError("parse-error", "cannot write " + path);
  f << content;
}

CayleyGroup read_group_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("parse-error", "cannot open " + path);
  // group file: "n <k>" then "table" then k rows of k integers
  std::vector<int> values;
  std::string word;
  int n = -1;
  bool in_table = false;
  std::string head;
  while (in >> word) {
    if (word[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (word == "n" && n < 0) {
      if (!(in >> n)) throw ValidationError("parse-error", "group file: bad n");
    } else if (word == "table") {
      in_table = true;
    } else if (in_table) {
      try {
        values.push_back(std::stoi(word));
      } catch (...) {
        throw ValidationError("parse-error", "group file: bad entry '" + word + "'");
      }
    } else {
      throw ValidationError("parse-error", "group file: unexpected token '" + word + "'");
    }
  }
  if (n <= 0 || static_cast<int>(values.size()) != n * n)
    throw ValidationError("parse-error", "group file: need n and an n*n table");
  return validate_group(n, values);
}

CayleyGroup builtin_group(const std::string &name) {
  if (name == "dihedral8") return dihedral_group(4);
  if (name == "quaternion8") return quaternion_group_8();
  if (name == "heisenberg27") return heisenberg_group_27();
  if (name.rfind("cyclic", 0) == 0) {
    int k = parse_int(name.substr(6), "--builtin cyclicN");
    if (k < 1 || k > 512) throw UsageError("cyclic order out of range");
    return cyclic_group(k);
  }
  throw UsageError("unknown builtin group '" + name +
                   "' (dihedral8, quaternion8, heisenberg27, cyclicN)");
}

njson solution_summary(const FiniteSolution &s) {
  njson rep;
  rep["kind"] = "solution";
  rep["n"] = s.n;
  rep["square-free"] = is_square_free(s);
  return rep;
}

njson brace_summary(const FiniteBrace &b) {
  njson rep;
  rep["kind"] = "brace";
  rep["n"] = b.size();
  rep["side"] = to_string(b.side);
  rep["socle-order"] = socle(b).count();
  return rep;
}

// ---- selftests -----------------------------------------------------------

bool selftest_core(std::ostream &out) {
  bool ok = true;
  auto check = [&](bool cond, const std::string &what) {
    out << (cond ? "  ok: " : "  FAIL: ") << what << "\n";
    ok = ok && cond;
  };
  // composition convention canary: (0 1 2) . (0 1) maps 0 to 2
  Permutation c = Permutation::from_cycles(3, {{0, 1, 2}});
  Permutation t = Permutation::from_cycles(3, {{0, 1}});
  check((c * t)(0) == 2 && (c * t)(1) == 1 && (c * t)(2) == 0,
        "composition applies the right factor first");
  check((t * t).is_identity(), "involution squared is the identity");
  CayleyGroup z6 = cyclic_group(6);
  check(z6.is_abelian() && element_order(z6, 1) == 6, "Z6 sanity");
  F2Matrix m{4, {0b1010, 0b0110, 0b1100}};
  check(f2_same_span(f2_reduce(m), f2_reduce(f2_reduce(m))), "GF(2) reduction idempotent");
  check(f2_rank(m) == 2, "GF(2) rank");
  return ok;
}

bool selftest_brace(std::ostream &out) {
  bool ok = true;
  auto check = [&](bool cond, const std::string &what) {
    out << (cond ? "  ok: " : "  FAIL: ") << what << "\n";
    ok = ok && cond;
  };
  FiniteBrace s3 = sym3_brace();
  check(s3.side == BraceSide::Left, "Sym3 fixture is left-only");
  check(socle(s3).count() == 3, "Sym3 socle has order 3");
  check(check_lambda_homomorphism(s3).ok, "lambda laws hold");
  FiniteBrace op = opposite_brace(s3);
  check(op.side == BraceSide::Right, "opposite is right-only");
  check(quotient_brace(s3, socle(s3)).brace.size() == 2, "quotient by socle has order 2");
  return ok;
}

bool selftest_solution(std::ostream &out) {
  bool ok = true;
  auto check = [&](bool cond, const std::string &what) {
    out << (cond ? "  ok: " : "  FAIL: ") << what << "\n";
    ok = ok && cond;
  };
  FiniteSolution six = six_point_solution();
  check(is_square_free(six), "six-point fixture is square free");
  check(retract(six).quotient.n == 4, "six-point retract has 4 classes");
  MplResult m = mpl(six);
  check(m.finite && m.level == 3, "six-point mpl");
  check(yb_group(six).elements.size() == 6, "six-point permutation group order 6");
  return ok;
}

bool selftest_bridge(std::ostream &out) {
  bool ok = true;
  auto check = [&](bool cond, const std::string &what) {
    out << (cond ? "  ok: " : "  FAIL: ") << what << "\n";
    ok = ok && cond;
  };
  FiniteBrace s3 = sym3_brace();
  check(retract_equals_socle_quotient(s3), "Ret(G,r) = solution of G/Soc(G)");
  FiniteSolution assoc = solution_from_brace(s3);
  MplResult m = mpl(assoc);
  check(m.finite && m.level == 2, "Sym3 associated solution has level 2");
  IStructure is(six_point_solution());
  check(itype_basis_check(is), "I-structure basis check");
  // cocycle law on a couple of fixed vectors
  std::vector<int> a{1, -2, 0, 3, 0, -1}, b{0, 1, -1, 0, 2, 0};
  SGElement prod = sg_mul(is, {a}, {b});
  check(is.phi(prod.vec) == is.phi(a) * is.phi(b), "cocycle law");
  return ok;
}

bool selftest_constructions(std::ostream &out) {
  bool ok = true;
  auto check = [&](bool cond, const std::string &what) {
    out << (cond ? "  ok: " : "  FAIL: ") << what << "\n";
    ok = ok && cond;
  };
  check(aug_brace_mpl(2) == 2, "augmentation brace level 2");
  FiniteBrace aug2 = materialize_aug_brace(2);
  check(aug2.size() == 8 && aug2.is_two_sided(), "aug(2) has order 8, two-sided");
  check(brace_square_free(aug2), "aug(2) square free");
  theorem_square_report(aug2);
  out << "  ok: aug(2) passes the square-free structure report\n";
  theorem_square_report(class2_brace(dihedral_group(4)));
  out << "  ok: class-2 brace from dihedral-8 passes the report\n";
  check(adjoint_embedding(2, cyclic_group(4)).injective, "adjoint embedding of Z4");
  return ok;
}

bool selftest_enumerate(std::ostream &out) {
  bool ok = true;
  auto check = [&](bool cond, const std::string &what) {
    out << (cond ? "  ok: " : "  FAIL: ") << what << "\n";
    ok = ok && cond;
  };
  SolutionEnumeration n2 = enumerate_solutions(2, true);
  check(n2.raw_count == 2 && n2.iso_count == 2, "two solutions on two points");
  BraceEnumeration b3 = enumerate_braces(cyclic_group(3), true);
  check(b3.iso_count == 1, "one brace with additive group Z3");
  FiniteSolution six = six_point_solution();
  check(canonicalize(six) == canonicalize(six), "canonical form deterministic");
  return ok;
}

int run_selftest(const std::string &command, const Manifest &m, std::ostream &out) {
  std::map<std::string, std::vector<std::string>> modules_for = {
      {"validate", {"solution", "brace"}}, {"from-brace", {"bridge"}},
      {"double-cover", {"bridge"}},        {"retract", {"solution"}},
      {"mpl", {"solution", "bridge"}},     {"socle", {"brace"}},
      {"quotient", {"brace"}},             {"ybgroup", {"solution"}},
      {"iyb-brace", {"bridge"}},           {"product", {"brace"}},
      {"augbrace", {"constructions"}},     {"class2", {"constructions"}},
      {"embed", {"constructions"}},        {"enumerate", {"enumerate"}},
      {"sweep", {"enumerate"}},            {"fixtures", {"constructions"}},
  };
  std::map<std::string, std::function<bool(std::ostream &)>> suites = {
      {"core", selftest_core},           {"brace", selftest_brace},
      {"solution", selftest_solution},   {"bridge", selftest_bridge},
      {"constructions", selftest_constructions}, {"enumerate", selftest_enumerate},
  };
  (void)m;
  std::vector<std::string> to_run = {"core"};
  for (const std::string &mod : modules_for.at(command)) to_run.push_back(mod);
  bool ok = true;
  for (const std::string &mod : to_run) {
    out << "selftest " << mod << ":\n";
    bool this_ok = suites.at(mod)(out);
    out << "module " << mod << ": " << (this_ok ? "pass" : "FAIL") << "\n";
    ok = ok && this_ok;
  }
  return ok ? 0 : 1;
}

// ---- subcommands ---------------------------------------------------------

int cmd_validate(const Manifest &m, std::ostream &out) {
  njson rep;
  if (m.has("--solution")) {
    FiniteSolution s = read_solution_file(m.get("--solution"));
    rep = solution_summary(s);
    rep["valid"] = true;
  } else if (m.has("--brace")) {
    FiniteBrace b = read_brace_file(m.get("--brace"));
    rep = brace_summary(b);
    rep["valid"] = true;
  } else {
    throw UsageError("validate needs --solution or --brace");
  }
  emit(out, m, rep);
  return 0;
}

int cmd_from_brace(const Manifest &m, std::ostream &out) {
  if (!m.has("--brace")) throw UsageError("from-brace needs --brace");
  FiniteBrace b = read_brace_file(m.get("--brace"));
  FiniteSolution s = solution_from_brace(b);
  njson rep = solution_summary(s);
  emit(out, m, rep);
  write_output(m, write_solution_string(s), out);
  return 0;
}

int cmd_double_cover(const Manifest &m, std::ostream &out) {
  if (!m.has("--brace")) throw UsageError("double-cover needs --brace");
  FiniteBrace b = read_brace_file(m.get("--brace"));
  DoubleCover dc = double_cover_solution(b);
  njson rep = solution_summary(dc.solution);
  njson labels = njson::array();
  for (auto [elem, layer] : dc.labels)
    labels.push_back(std::to_string(elem) + ":" + std::to_string(layer));
  rep["labels"] = labels;
  emit(out, m, rep);
  write_output(m, write_solution_string(dc.solution), out);
  return 0;
}

int cmd_retract(const Manifest &m, std::ostream &out) {
  if (!m.has("--solution")) throw UsageError("retract needs --solution");
  FiniteSolution s = read_solution_file(m.get("--solution"));
  RetractionStep step = retract(s);
  njson rep;
  rep["kind"] = "retraction";
  rep["n"] = s.n;
  rep["quotient-n"] = step.quotient.n;
  njson classes = njson::array();
  for (const auto &cls : step.classes) {
    std::string c;
    for (size_t i = 0; i < cls.size(); ++i) c += (i ? "," : "") + std::to_string(cls[i]);
    classes.push_back(c);
  }
  rep["classes"] = classes;
  emit(out, m, rep);
  write_output(m, write_solution_string(step.quotient), out);
  return 0;
}

int cmd_mpl(const Manifest &m, std::ostream &out) {
  njson rep;
  MplResult r;
  if (m.has("--solution")) {
    FiniteSolution s = read_solution_file(m.get("--solution"));
    r = mpl(s);
    rep["kind"] = "solution";
  } else if (m.has("--brace")) {
    FiniteBrace b = read_brace_file(m.get("--brace"));
    rep["kind"] = "brace";
    if (m.has("--via-solution")) {
      r = mpl(solution_from_brace(b));
      rep["route"] = "associated solution";
    } else {
      // socle-quotient chain; stalls exactly when the socle is trivial
      rep["route"] = "socle quotients";
      r.finite = false;
      r.level = 0;
      FiniteBrace cur = b;
      while (true) {
        if (cur.size() == 1) {
          r.finite = true;
          r.stable_size = 1;
          break;
        }
        BraceSubset soc = socle(cur);
        if (soc.count() <= 1) {
          r.stable_size = cur.size();
          break;
        }
        cur = quotient_brace(cur, soc).brace;
        ++r.level;
      }
    }
  } else {
    throw UsageError("mpl needs --solution or --brace");
  }
  if (r.finite)
    rep["mpl"] = r.level;
  else
    rep["irretractable-at-size"] = r.stable_size;
  emit(out, m, rep);
  return 0;
}

int cmd_socle(const Manifest &m, std::ostream &out) {
  if (!m.has("--brace")) throw UsageError("socle needs --brace");
  FiniteBrace b = read_brace_file(m.get("--brace"));
  BraceSubset soc = socle(b);
  njson rep;
  rep["kind"] = "socle";
  rep["n"] = b.size();
  rep["socle-order"] = soc.count();
  njson elems = njson::array();
  for (int e : soc.elements()) elems.push_back(e);
  rep["elements"] = elems;
  emit(out, m, rep);
  return 0;
}

int cmd_quotient(const Manifest &m, std::ostream &out) {
  if (!m.has("--brace")) throw UsageError("quotient needs --brace");
  FiniteBrace b = read_brace_file(m.get("--brace"));
  BraceSubset ideal;
  if (m.has("--by-socle")) {
    ideal = socle(b);
  } else if (m.has("--ideal")) {
    std::istringstream in(m.get("--ideal"));
    std::vector<int> elems;
    int v;
    while (in >> v) elems.push_back(v);
    if (elems.empty()) throw UsageError("--ideal needs a space-separated element list");
    for (int e : elems)
      if (e < 0 || e >= b.size()) throw UsageError("--ideal element out of range");
    ideal = BraceSubset::of(b.size(), elems);
  } else {
    throw UsageError("quotient needs --ideal or --by-socle");
  }
  QuotientBrace q = quotient_brace(b, ideal);
  njson rep = brace_summary(q.brace);
  njson proj = njson::array();
  for (int p : q.projection) proj.push_back(p);
  rep["projection"] = proj;
  emit(out, m, rep);
  write_output(m, write_brace_string(q.brace), out);
  return 0;
}

int cmd_ybgroup(const Manifest &m, std::ostream &out) {
  if (!m.has("--solution")) throw UsageError("ybgroup needs --solution");
  FiniteSolution s = read_solution_file(m.get("--solution"));
  WitnessedClosure g = yb_group(s);
  njson rep;
  rep["kind"] = "permutation-group";
  rep["order"] = g.elements.size();
  rep["abelian"] = g.abelian;
  auto cls = nilpotency_class(g.group);
  if (cls)
    rep["nilpotency-class"] = *cls;
  else
    rep["nilpotency-class"] = "not nilpotent";
  if (m.has("--elements")) {
    njson elems = njson::array();
    for (const auto &p : g.elements) elems.push_back(p.to_cycle_string());
    rep["elements"] = elems;
  }
  emit(out, m, rep);
  return 0;
}

int cmd_iyb_brace(const Manifest &m, std::ostream &out) {
  if (!m.has("--solution")) throw UsageError("iyb-brace needs --solution");
  FiniteSolution s = read_solution_file(m.get("--solution"));
  IybQuotient q = iyb_quotient_brace(s);
  njson rep = brace_summary(q.brace);
  rep["associated-solution-square-free"] = is_square_free(solution_from_brace(q.brace));
  emit(out, m, rep);
  write_output(m, write_brace_string(q.brace), out);
  return 0;
}

int cmd_product(const Manifest &m, std::ostream &out) {
  std::string kind = m.get("--kind");
  if (kind != "direct" && kind != "semidirect" && kind != "wreath")
    throw UsageError("--kind must be direct, semidirect or wreath");
  if (!m.has("--left") || !m.has("--right"))
    throw UsageError("product needs --left and --right brace files");
  FiniteBrace left = read_brace_file(m.get("--left"));
  FiniteBrace right = read_brace_file(m.get("--right"));
  FiniteBrace prod;
  if (kind == "direct") {
    prod = direct_product_brace(left, right);
  } else if (kind == "wreath") {
    prod = wreath_product_brace(left, right);
  } else {
    if (!m.has("--eta")) throw UsageError("semidirect product needs --eta");
    // eta file: |H| rows of |N| integers, row h = images of eta(h)
    std::ifstream in(m.get("--eta"));
    if (!in) throw ValidationError("parse-error", "cannot open " + m.get("--eta"));
    std::vector<Permutation> eta;
    for (int h = 0; h < right.size(); ++h) {
      std::vector<int> img(static_cast<size_t>(left.size()));
      for (int i = 0; i < left.size(); ++i)
        if (!(in >> img[static_cast<size_t>(i)]))
          throw ValidationError("parse-error", "eta file: need |H| rows of |N| integers");
      eta.push_back(Permutation(std::move(img)));
    }
    prod = semidirect_product_brace(left, right, eta);
  }
  njson rep = brace_summary(prod);
  rep["product"] = kind;
  emit(out, m, rep);
  write_output(m, write_brace_string(prod), out);
  return 0;
}

int cmd_augbrace(const Manifest &m, std::ostream &out) {
  if (!m.has("-n")) throw UsageError("augbrace needs -n");
  int n = parse_int(m.get("-n"), "-n");
  F2IdealBrace b = aug_brace(n);
  njson rep;
  rep["kind"] = "augmentation-ideal-brace";
  rep["rank"] = n;
  rep["ring-order"] = b.element_count();
  if (m.has("--mpl")) rep["mpl"] = aug_brace_mpl(n);
  if (m.has("--basis")) {
    int power = parse_int(m.get("--basis"), "--basis");
    F2Matrix basis = ideal_power_basis(n, power);
    rep["power"] = power;
    rep["rank-of-power"] = basis.rows.size();
    njson rows = njson::array();
    for (uint64_t r : basis.rows) {
      std::string bits;
      for (int i = 0; i < b.group_order; ++i) bits += (r >> i & 1) ? '1' : '0';
      rows.push_back(bits);
    }
    rep["basis"] = rows;
  }
  emit(out, m, rep);
  if (m.has("--materialize")) {
    FiniteBrace dense = materialize_aug_brace(n);
    write_output(m, write_brace_string(dense), out);
  }
  return 0;
}

int cmd_class2(const Manifest &m, std::ostream &out) {
  CayleyGroup g = m.has("--group") ? read_group_file(m.get("--group"))
                                   : builtin_group(m.get("--builtin", ""));
  FiniteBrace b = class2_brace(g);
  njson rep = brace_summary(b);
  rep["group-order"] = g.n;
  rep["carrier-order"] = b.size();
  rep["square-free"] = brace_square_free(b);
  emit(out, m, rep);
  write_output(m, write_brace_string(b), out);
  return 0;
}

int cmd_embed(const Manifest &m, std::ostream &out) {
  if (!m.has("-p")) throw UsageError("embed needs -p");
  int p = parse_int(m.get("-p"), "-p");
  CayleyGroup g = m.has("--group") ? read_group_file(m.get("--group"))
                                   : builtin_group(m.get("--builtin", ""));
  AdjointEmbeddingReport rep = adjoint_embedding(p, g);
  njson j;
  j["kind"] = "adjoint-embedding";
  j["p"] = rep.p;
  j["group-order"] = rep.group_order;
  j["ring-order"] = rep.ring_size;
  j["homomorphism"] = rep.homomorphism;
  j["injective"] = rep.injective;
  emit(out, m, j);
  return 0;
}

int cmd_enumerate(const Manifest &m, std::ostream &out) {
  int jobs = m.has("--jobs") ? parse_int(m.get("--jobs"), "--jobs") : 1;
  if (jobs < 1) throw UsageError("--jobs must be positive");
  bool up_to_iso = m.has("--up-to-iso");
  njson rep;
  if (m.has("--solutions")) {
    if (!m.has("-n")) throw UsageError("enumerate --solutions needs -n");
    int n = parse_int(m.get("-n"), "-n");
    SolutionEnumeration en = enumerate_solutions(n, up_to_iso, jobs);
    rep["kind"] = "solution-census";
    rep["n"] = n;
    rep["raw-count"] = en.raw_count;
    if (up_to_iso) rep["iso-count"] = en.iso_count;
    emit(out, m, rep);
    if (m.has("--census"))
      for (const auto &s : en.solutions) out << census_line(s) << "\n";
  } else if (m.has("--braces")) {
    if (!m.has("--order")) throw UsageError("enumerate --braces needs --order");
    int order = parse_int(m.get("--order"), "--order");
    rep["kind"] = "brace-census";
    rep["order"] = order;
    long long total_raw = 0, total_iso = 0;
    njson per_group;
    std::vector<FiniteBrace> all;
    for (auto &[name, group] : abelian_groups_of_order(order)) {
      BraceEnumeration en = enumerate_braces(group, up_to_iso);
      njson g;
      g["raw-count"] = en.raw_count;
      if (up_to_iso) g["iso-count"] = en.iso_count;
      per_group[name] = g;
      total_raw += en.raw_count;
      total_iso += en.iso_count;
      for (auto &b : en.braces) all.push_back(std::move(b));
    }
    rep["additive-groups"] = per_group;
    rep["raw-count"] = total_raw;
    if (up_to_iso) rep["iso-count"] = total_iso;
    emit(out, m, rep);
    if (m.has("--census"))
      for (const auto &b : all) out << census_line(b) << "\n";
  } else {
    throw UsageError("enumerate needs --solutions or --braces");
  }
  return 0;
}

int cmd_sweep(const Manifest &m, std::ostream &out) {
  std::string theorem = m.get("--theorem");
  int jobs = m.has("--jobs") ? parse_int(m.get("--jobs"), "--jobs") : 1;
  SweepResult res;
  if (theorem == "abelian-retractable") {
    res = sweep_abelian_retractable(parse_int(m.get("--max-n", "4"), "--max-n"), jobs);
  } else if (theorem == "square-free-decomposable") {
    res = sweep_square_free_decomposable(parse_int(m.get("--max-n", "4"), "--max-n"), jobs);
  } else if (theorem == "retract-socle") {
    res = sweep_retract_socle(parse_int(m.get("--max-order", "8"), "--max-order"));
  } else if (theorem == "two-sided-socle") {
    res = sweep_two_sided_socle(parse_int(m.get("--max-order", "8"), "--max-order"));
  } else {
    throw UsageError(
        "--theorem must be one of abelian-retractable, square-free-decomposable, "
        "retract-socle, two-sided-socle");
  }
  njson rep;
  rep["kind"] = "sweep";
  rep["theorem"] = res.check;
  rep["tested"] = res.tested;
  rep["counterexamples"] = res.counterexamples;
  if (res.counterexamples > 0) rep["witness"] = res.first_witness;
  emit(out, m, rep);
  return res.counterexamples == 0 ? 0 : 1;
}

int cmd_fixtures(const Manifest &m, std::ostream &out) {
  std::vector<std::string> names;
  for (auto &[name, b] : fixture_braces()) names.push_back("brace:" + name);
  names.push_back("solution:six-point");
  if (m.has("--emit")) {
    std::string want = m.get("--emit");
    if (want == "solution:six-point" || want == "six-point") {
      write_output(m, write_solution_string(six_point_solution()), out);
      return 0;
    }
    for (auto &[name, b] : fixture_braces())
      if ("brace:" + name == want || name == want) {
        write_output(m, write_brace_string(b), out);
        return 0;
      }
    throw UsageError("unknown fixture '" + want + "'");
  }
  njson rep;
  rep["kind"] = "fixtures";
  njson arr = njson::array();
  for (const auto &n : names) arr.push_back(n);
  rep["available"] = arr;
  emit(out, m, rep);
  return 0;
}

}  // namespace

bool Manifest::has(const std::string &flag) const {
  for (const auto &[f, v] : options)
    if (f == flag) return true;
  return false;
}

std::string Manifest::get(const std::string &flag, const std::string &fallback) const {
  for (const auto &[f, v] : options)
    if (f == flag) return v;
  return fallback;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Manifest m;
  try {
    m = parse_manifest(args);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    err << "subcommands: validate from-brace double-cover retract mpl socle quotient ybgroup "
           "iyb-brace product augbrace class2 embed enumerate sweep fixtures\n";
    return 2;
  }
  try {
    if (m.has("--selftest")) return run_selftest(m.command, m, out);
    if (m.command == "validate") return cmd_validate(m, out);
    if (m.command == "from-brace") return cmd_from_brace(m, out);
    if (m.command == "double-cover") return cmd_double_cover(m, out);
    if (m.command == "retract") return cmd_retract(m, out);
    if (m.command == "mpl") return cmd_mpl(m, out);
    if (m.command == "socle") return cmd_socle(m, out);
    if (m.command == "quotient") return cmd_quotient(m, out);
    if (m.command == "ybgroup") return cmd_ybgroup(m, out);
    if (m.command == "iyb-brace") return cmd_iyb_brace(m, out);
    if (m.command == "product") return cmd_product(m, out);
    if (m.command == "augbrace") return cmd_augbrace(m, out);
    if (m.command == "class2") return cmd_class2(m, out);
    if (m.command == "embed") return cmd_embed(m, out);
    if (m.command == "enumerate") return cmd_enumerate(m, out);
    if (m.command == "sweep") return cmd_sweep(m, out);
    if (m.command == "fixtures") return cmd_fixtures(m, out);
    err << "usage error: unknown subcommand\n";
    return 2;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError &e) {
    njson rep;
    rep["valid"] = false;
    rep["error"] = e.code();
    rep["message"] = e.what();
    njson w = njson::array();
    for (int x : e.witness()) w.push_back(x);
    rep["witness"] = w;
    emit(out, m, rep);
    return 1;
  }
}

}  // namespace ybe::cli
