#include "oigb/session.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace oigb {

namespace {

std::string trim(std::string_view text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

}  // namespace

Field parse_field(std::string_view text) {
  std::string s = trim(text);
  if (s == "Q") return Field::rationals();
  if (s.rfind("Fp", 0) == 0) {
    std::string arg = trim(s.substr(2));
    if (!arg.empty() && arg.front() == '(' && arg.back() == ')')
      arg = trim(arg.substr(1, arg.size() - 2));
    try {
      return Field::prime(std::stoll(arg));
    } catch (const NonPrimeModulus&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad prime field spec: " + s);
    }
  }
  throw ParseError("unknown field: " + s);
}

std::vector<ModuleElement> parse_generator_list(std::string_view text, const SignaturePtr& sig,
                                                const Field& field) {
  std::vector<ModuleElement> out;
  std::string body(text);
  size_t start = 0;
  while (start <= body.size()) {
    size_t split = body.find(';', start);
    std::string entry = trim(body.substr(start, split == std::string::npos ? std::string::npos
                                                                           : split - start));
    if (!entry.empty()) {
      size_t colon = entry.find(':');
      if (colon == std::string::npos)
        throw ParseError("generator entry needs a width prefix `n:`: " + entry);
      int width = 0;
      try {
        width = std::stoi(trim(entry.substr(0, colon)));
      } catch (const std::exception&) {
        throw ParseError("bad generator width in: " + entry);
      }
      out.push_back(parse_element(entry.substr(colon + 1), sig, width, field));
    }
    if (split == std::string::npos) break;
    start = split + 1;
  }
  return out;
}

std::vector<ModuleElement> parse_element_file(std::istream& in, const SignaturePtr& sig,
                                              const Field& field) {
  std::vector<ModuleElement> out;
  std::string line;
  int width = -1;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    if (body.rfind("width:", 0) == 0) {
      try {
        width = std::stoi(trim(body.substr(6)));
      } catch (const std::exception&) {
        throw ParseError("bad width header: " + body);
      }
      continue;
    }
    if (width < 0) throw ParseError("element before any `width: n` header: " + body);
    out.push_back(parse_element(body, sig, width, field));
  }
  return out;
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open session file: " + path);

  std::map<std::string, std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    size_t eq = body.find('=');
    if (eq == std::string::npos) throw ParseError("expected `key = value`: " + body);
    entries[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
  }

  Session session;
  if (auto it = entries.find("field"); it != entries.end()) session.field = parse_field(it->second);
  if (auto it = entries.find("scheme"); it != entries.end())
    session.scheme = VariableScheme::parse(it->second);
  std::vector<SignatureSlot> slots{SignatureSlot{0, 0}};
  if (auto it = entries.find("signature"); it != entries.end())
    slots = parse_signature(it->second);
  session.signature = make_signature(session.scheme, std::move(slots));
  if (auto it = entries.find("order"); it != entries.end()) session.order_name = it->second;
  make_order(session.order_name);  // validates the name
  if (auto it = entries.find("flavor"); it != entries.end()) {
    if (it->second == "oi")
      session.flavor = GeneratorFlavor::OI;
    else if (it->second == "fi")
      session.flavor = GeneratorFlavor::FI;
    else
      throw ParseError("flavor must be `oi` or `fi`: " + it->second);
  }
  auto parse_int = [&](const char* key, int& target) {
    if (auto it = entries.find(key); it != entries.end()) {
      try {
        target = std::stoi(it->second);
      } catch (const std::exception&) {
        throw ParseError(std::string("bad integer for ") + key + ": " + it->second);
      }
    }
  };
  parse_int("max_width", session.max_width);
  parse_int("lookahead", session.lookahead);

  if (auto it = entries.find("generators"); it != entries.end())
    session.generators =
        parse_generator_list(it->second, session.signature, session.field);
  if (auto it = entries.find("generators_file"); it != entries.end()) {
    std::filesystem::path file(it->second);
    if (file.is_relative()) file = std::filesystem::path(path).parent_path() / file;
    std::ifstream gens(file);
    if (!gens) throw ParseError("cannot open generators file: " + file.string());
    auto more = parse_element_file(gens, session.signature, session.field);
    session.generators.insert(session.generators.end(), more.begin(), more.end());
  }
  return session;
}

}  // namespace oigb
