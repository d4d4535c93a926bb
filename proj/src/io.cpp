#include "tri/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace tri {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::optional<Adj> parse_symbol(const std::string& s) {
  if (s == "+") return Adj::Strong;
  if (s == "0") return Adj::Semi;
  if (s == "-") return Adj::StrongAnti;
  return std::nullopt;
}

}  // namespace

Trigraph read_tri(std::istream& in) {
  std::optional<Trigraph> g;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;
    if (!g) {
      int n = -1;
      if (first != "trigraph" || !(fields >> n)) fail(line, "expected header 'trigraph <n>'");
      if (n < 0 || n > Trigraph::kMaxVertices) fail(line, "vertex count out of range");
      g.emplace(n);
    } else {
      int u = 0, v = 0;
      std::string sym;
      try {
        std::size_t used = 0;
        u = std::stoi(first, &used);
        if (used != first.size()) fail(line, "bad vertex '" + first + "'");
      } catch (const std::logic_error&) {
        fail(line, "bad vertex '" + first + "'");
      }
      if (!(fields >> v >> sym)) fail(line, "expected '<u> <v> <s>'");
      auto value = parse_symbol(sym);
      if (!value) fail(line, "bad adjacency symbol '" + sym + "'");
      if (u < 0 || v < 0 || u >= g->size() || v >= g->size() || u == v) {
        fail(line, "invalid pair " + std::to_string(u) + " " + std::to_string(v));
      }
      g->set(u, v, *value);
    }
    std::string extra;
    if (fields >> extra) fail(line, "trailing text '" + extra + "'");
  }
  if (!g) throw InputError("missing 'trigraph <n>' header");
  return *g;
}

Trigraph parse_tri(const std::string& text) {
  std::istringstream in(text);
  return read_tri(in);
}

Trigraph load_tri(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_tri(in);
}

void write_tri(std::ostream& out, const Trigraph& g) {
  out << "trigraph " << g.size() << '\n';
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      Adj a = g.theta(u, v);
      if (a != Adj::StrongAnti) out << u << ' ' << v << ' ' << adj_symbol(a) << '\n';
    }
  }
}

std::string format_tri(const Trigraph& g) {
  std::ostringstream out;
  write_tri(out, g);
  return out.str();
}

}  // namespace tri
