#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "oigb/koszul.hpp"
#include "oigb/resolution.hpp"
#include "oigb/session.hpp"
#include "oigb/stabilize.hpp"

using json = nlohmann::json;
using namespace oigb;

namespace {

constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitFailure = 4;

struct SessionFlags {
  std::string path;
  std::string order;
  int max_width = -1, lookahead = -1;
};

Session resolve_session(const SessionFlags& flags) {
  Session session = load_session(flags.path);
  if (!flags.order.empty()) session.order_name = flags.order;
  make_order(session.order_name);
  if (flags.max_width >= 0) session.max_width = flags.max_width;
  if (flags.lookahead >= 0) session.lookahead = flags.lookahead;
  return session;
}

json session_config(const Session& session) {
  return json{{"field", session.field.str()},
              {"scheme", session.scheme.str()},
              {"signature", session.signature->str()},
              {"order", session.order_name},
              {"flavor", session.flavor == GeneratorFlavor::OI ? "oi" : "fi"},
              {"generators", session.generators.size()},
              {"max_width", session.max_width},
              {"lookahead", session.lookahead}};
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t split = text.find(',', start);
    std::string item =
        text.substr(start, split == std::string::npos ? std::string::npos : split - start);
    if (!item.empty()) {
      size_t dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        int lo = std::stoi(item.substr(0, dots));
        int hi = std::stoi(item.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    }
    if (split == std::string::npos) break;
    start = split + 1;
  }
  if (out.empty()) throw ParseError("empty range: " + text);
  return out;
}

int job_count(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("OIGB_JOBS")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 1;
}

ModuleElement parse_width_element(const std::string& text, const SignaturePtr& sig,
                                  const Field& field) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("element needs a width prefix `n:`: " + text);
  int width = 0;
  try {
    width = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw ParseError("bad width prefix in: " + text);
  }
  return parse_element(text.substr(colon + 1), sig, width, field);
}

int cmd_divides(const std::string& scheme_text, const std::string& flavor,
                const std::string& mu_text, int mu_width, const std::string& nu_text,
                int nu_width) {
  VariableScheme scheme = VariableScheme::parse(scheme_text);
  RingMonomial mu = parse_ring_monomial(mu_text, scheme, mu_width);
  RingMonomial nu = parse_ring_monomial(nu_text, scheme, nu_width);
  if (flavor == "oi") {
    if (auto witness = oi_divides(mu, nu)) {
      std::cout << witness->map.str() << " * " << witness->cofactor.str() << "\n";
      return kExitOk;
    }
  } else {
    if (auto witness = fi_divides(mu, nu)) {
      std::cout << witness->map.str() << " * " << witness->cofactor.str() << "\n";
      return kExitOk;
    }
  }
  std::cout << "none\n";
  return kExitNegative;
}

int cmd_nf(const SessionFlags& flags, const std::string& q_text) {
  Session session = resolve_session(flags);
  OrderPtr order = session.order();
  ModuleElement q = parse_width_element(q_text, session.signature, session.field);
  GeneratorSet gens = session.generator_set();
  ModuleElement reduced = normal_form(q, gens.generators(), *order);
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "nf"},
            {"config", session_config(session)},
            {"input", render_element(q, *order)},
            {"normal_form", render_element(reduced, *order)}});
  return kExitOk;
}

int cmd_gb(const SessionFlags& flags, bool strict) {
  Session session = resolve_session(flags);
  OrderPtr order = session.order();
  GeneratorSet gens = session.generator_set();
  EquivariantGB gb =
      equivariant_buchberger(gens, *order, EquivariantConfig{session.max_width, session.lookahead});

  json basis = json::array();
  for (const ModuleElement& b : gb.basis)
    basis.push_back(json{{"width", b.width()}, {"element", render_element(b, *order)}});
  bool limited = gb.cert.status == CertStatus::WidthLimited;
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "gb"},
            {"config", session_config(session)},
            {"basis", basis},
            {"certification",
             json{{"certified_width", gb.cert.certified_width},
                  {"lookahead", gb.cert.lookahead},
                  {"status", limited ? "width_limited" : "heuristically_certified"}}}});
  std::cerr << "gb: " << gb.basis.size() << " basis element(s), "
            << (limited ? "width-limited at " : "certified to width ") << gb.cert.certified_width
            << "\n";
  if (limited && strict) return kExitResourceCap;
  return kExitOk;
}

int cmd_betti(const SessionFlags& flags, const std::string& widths_text, int max_p,
              bool submodule, int jobs) {
  Session session = resolve_session(flags);
  OrderPtr order = session.order();
  GeneratorSet gens = session.generator_set();
  std::vector<int> widths = parse_range(widths_text);
  ResolutionOptions options{!submodule, true};

  std::vector<std::map<std::pair<int, int>, long>> per_width(widths.size());
  int workers = std::min<int>(job_count(jobs), static_cast<int>(widths.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < widths.size(); ++i)
      per_width[i] = width_resolution(gens, *order, widths[i], max_p, options).betti();
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (size_t i = next.fetch_add(1); i < widths.size(); i = next.fetch_add(1))
          per_width[i] = width_resolution(gens, *order, widths[i], max_p, options).betti();
      });
    for (std::thread& t : pool) t.join();
  }

  BettiTable table;
  for (size_t i = 0; i < widths.size(); ++i) {
    table.record_width(widths[i]);
    for (const auto& [key, count] : per_width[i])
      if (key.first <= max_p) table.set(widths[i], key.first, key.second, count);
  }

  json entries = json::array();
  for (const auto& [key, beta] : table.entries()) {
    auto [n, p, j] = key;
    entries.push_back(json{{"width", n}, {"p", p}, {"j", j}, {"beta", beta}});
  }
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "betti"},
            {"config", session_config(session)},
            {"module", submodule ? "submodule" : "quotient"},
            {"max_p", max_p},
            {"widths", widths},
            {"entries", entries}});
  std::cerr << "betti: " << entries.size() << " nonzero entr(ies) over " << widths.size()
            << " width(s)\n";
  return kExitOk;
}

int cmd_koszul(const std::string& element_text, int width, int max_degree, int max_p, int rows,
               const std::string& field_text) {
  Field field = parse_field(field_text);
  VariableScheme scheme = VariableScheme::tensor(rows);
  Polynomial element = parse_polynomial(element_text, scheme, 1, field);
  KoszulComplex complex(element, width);
  if (max_degree < 0) max_degree = width * complex.element_degree() + 2;
  if (max_p < 0) max_p = width;

  bool complex_ok = complex.complex_property_holds();
  json homology = json::array();
  for (const auto& [key, dim] : complex.homology(max_degree, max_p))
    homology.push_back(json{{"p", key.first}, {"j", key.second}, {"dim", dim}});
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "koszul"},
            {"config", json{{"a", element.str()},
                            {"width", width},
                            {"c", rows},
                            {"field", field.str()},
                            {"max_degree", max_degree},
                            {"max_p", max_p}}},
            {"complex_ok", complex_ok},
            {"homology", homology}});
  std::cerr << "koszul: complex_ok=" << (complex_ok ? "true" : "false") << ", " << homology.size()
            << " nonzero homology entr(ies)\n";
  return kExitOk;
}

int cmd_stabilize(const std::string& table_path, const std::string& p_range,
                  int min_consecutive) {
  std::ifstream in(table_path);
  if (!in) throw ParseError("cannot open table file: " + table_path);
  json data = json::parse(in, nullptr, false);
  if (data.is_discarded() || !data.contains("entries") || !data.contains("widths"))
    throw ParseError("not a betti table: " + table_path);

  BettiTable table;
  for (const auto& w : data["widths"]) table.record_width(w.get<int>());
  for (const auto& entry : data["entries"])
    table.set(entry["width"].get<int>(), entry["p"].get<int>(), entry["j"].get<int>(),
              entry["beta"].get<long>());

  json reports = json::array();
  for (int p : parse_range(p_range)) {
    StabilizationEntry entry = detect(table, p, min_consecutive);
    json report{{"p", entry.p},
                {"status", entry.status == StabilizationEntry::Status::Stable ? "stable"
                                                                              : "not_yet_stable"},
                {"stable_set", entry.stable_set}};
    if (entry.onset_width) report["onset_width"] = *entry.onset_width;
    if (entry.max_degree) report["max_degree"] = *entry.max_degree;
    reports.push_back(std::move(report));
  }
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "stabilize"},
            {"config", json{{"table", table_path}, {"min_consecutive", min_consecutive}}},
            {"reports", reports}});
  return kExitOk;
}

int cmd_encode(const std::string& scheme_text, int width, const std::string& term_text) {
  VariableScheme scheme = VariableScheme::parse(scheme_text);
  // any basis arity is acceptable here; the code only needs c and d
  std::vector<SignatureSlot> slots;
  for (int d = 0; d <= width; ++d) slots.push_back(SignatureSlot{d, 0});
  SignaturePtr sig = make_signature(scheme, std::move(slots));
  ModuleElement elem = parse_element(term_text, sig, width, Field::rationals());
  if (elem.term_count() != 1) throw ParseError("encode expects a single module monomial");
  HigmanCode code = encode_higman(elem.terms().front().first);

  json entries = json::array();
  for (const auto& entry : code.entries()) {
    json pairs = json::array();
    for (const auto& pair : entry) pairs.push_back(json{{"exps", pair.exps}, {"pos", pair.pos}});
    entries.push_back(std::move(pairs));
  }
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "encode"},
            {"config", json{{"scheme", scheme.str()}, {"width", width}, {"term", term_text}}},
            {"c", code.rows()},
            {"d", code.basis_degree()},
            {"code", entries}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Groebner engine for width-indexed polynomial modules"};
  app.require_subcommand(1);

  auto* divides = app.add_subcommand("divides", "Decide OI/FI-divisibility of ring monomials");
  std::string div_scheme = "tensor 1", div_flavor = "oi", div_mu, div_nu;
  int div_mu_width = 0, div_nu_width = 0;
  divides->add_option("--scheme", div_scheme);
  divides->add_option("--flavor", div_flavor)->check(CLI::IsMember({"oi", "fi"}));
  divides->add_option("--mu", div_mu)->required();
  divides->add_option("--mu-width", div_mu_width)->required();
  divides->add_option("--nu", div_nu)->required();
  divides->add_option("--nu-width", div_nu_width)->required();

  SessionFlags flags;
  auto add_session_flags = [&flags](CLI::App* cmd) {
    cmd->add_option("--session", flags.path)->required();
    cmd->add_option("--order", flags.order);
    cmd->add_option("--max-width", flags.max_width);
    cmd->add_option("--lookahead", flags.lookahead);
  };

  auto* nf = app.add_subcommand("nf", "Normal form of an element against the generators");
  std::string nf_q;
  add_session_flags(nf);
  nf->add_option("--q", nf_q)->required();

  auto* gb = app.add_subcommand("gb", "Equivariant Groebner basis with width certification");
  bool gb_strict = false;
  add_session_flags(gb);
  gb->add_flag("--strict", gb_strict, "exit 3 when the width cap is hit");

  auto* betti = app.add_subcommand("betti", "Graded Betti numbers per width");
  std::string betti_widths;
  int betti_max_p = 4, betti_jobs = 0;
  bool betti_submodule = false;
  add_session_flags(betti);
  betti->add_option("--widths", betti_widths)->required();
  betti->add_option("--max-p", betti_max_p);
  betti->add_flag("--submodule", betti_submodule, "resolve the submodule, not the quotient");
  betti->add_option("--jobs", betti_jobs);

  auto* koszul = app.add_subcommand("koszul", "Koszul complex check and homology");
  std::string koszul_a, koszul_field = "Q";
  int koszul_width = 0, koszul_max_degree = -1, koszul_max_p = -1, koszul_rows = 1;
  koszul->add_option("--a", koszul_a)->required();
  koszul->add_option("--width", koszul_width)->required();
  koszul->add_option("--max-degree", koszul_max_degree);
  koszul->add_option("--max-p", koszul_max_p);
  koszul->add_option("--c", koszul_rows);
  koszul->add_option("--field", koszul_field);

  auto* stabilize = app.add_subcommand("stabilize", "Betti degree-set stabilization report");
  std::string stab_table, stab_p = "0..4";
  int stab_min_consecutive = 3;
  stabilize->add_option("--table", stab_table)->required();
  stabilize->add_option("--p", stab_p);
  stabilize->add_option("--min-consecutive", stab_min_consecutive);

  auto* encode = app.add_subcommand("encode", "Higman sequence code of a module monomial");
  std::string enc_scheme = "tensor 1", enc_term;
  int enc_width = 0;
  encode->add_option("--scheme", enc_scheme);
  encode->add_option("--width", enc_width)->required();
  encode->add_option("--term", enc_term)->required();

  try {
    app.parse(argc, argv);
    if (divides->parsed())
      return cmd_divides(div_scheme, div_flavor, div_mu, div_mu_width, div_nu, div_nu_width);
    if (nf->parsed()) return cmd_nf(flags, nf_q);
    if (gb->parsed()) return cmd_gb(flags, gb_strict);
    if (betti->parsed())
      return cmd_betti(flags, betti_widths, betti_max_p, betti_submodule, betti_jobs);
    if (koszul->parsed())
      return cmd_koszul(koszul_a, koszul_width, koszul_max_degree, koszul_max_p, koszul_rows,
                        koszul_field);
    if (stabilize->parsed()) return cmd_stabilize(stab_table, stab_p, stab_min_consecutive);
    if (encode->parsed()) return cmd_encode(enc_scheme, enc_width, enc_term);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
