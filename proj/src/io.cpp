#include "egc/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>

#include "egc/errors.hpp"

namespace egc {

namespace {

class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    std::string tok;
    if (in_ >> tok) return tok;
    return std::nullopt;
  }

  std::string word(const char* what) {
    auto tok = next();
    if (!tok) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return *tok;
  }

  void expect(const char* keyword) {
    const std::string tok = word(keyword);
    if (tok != keyword) throw ParseError("expected '" + std::string(keyword) + "', got '" + tok + "'");
  }

  std::uint64_t number(const char* what) {
    const std::string tok = word(what);
    return to_number(tok, what);
  }

  static std::uint64_t to_number(const std::string& tok, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(std::string("bad ") + what + " '" + tok + "'");
    return value;
  }

 private:
  std::istream& in_;
};

Colouring read_body(Tokens& tok) {
  tok.expect("egc");
  if (tok.number("format version") != 1) throw ParseError("unsupported EGC version");
  tok.expect("n");
  const std::uint64_t n = tok.number("vertex count");
  if (n == 0) throw ParseError("vertex count must be positive");
  tok.expect("colours");
  const std::uint64_t k = tok.number("palette size");
  std::vector<ColourId> colours(edge_count(n));
  for (auto& x : colours) {
    const std::uint64_t id = tok.number("colour id");
    if (id >= k) throw ParseError("colour id " + std::to_string(id) + " outside palette");
    x = static_cast<ColourId>(id);
  }
  return Colouring(n, k, std::move(colours));
}

std::optional<ColourId> star_or_id(const std::string& s) {
  if (s == "*") return std::nullopt;
  return static_cast<ColourId>(Tokens::to_number(s, "component colour"));
}

template <class Out>
Out& component_out(Out& out, const std::optional<ColourId>& x) {
  if (x)
    out << *x;
  else
    out << '*';
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

void write_colouring(std::ostream& out, const Colouring& c) {
  const std::size_t n = c.vertices();
  out << "egc 1\nn " << n << "\ncolours " << c.palette_size() << '\n';
  EdgeIndex e = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++e) {
      if (j > i + 1) out << ' ';
      out << c.at_edge(e);
    }
    out << '\n';
  }
}

Colouring read_colouring(std::istream& in) {
  Tokens tok(in);
  Colouring c = read_body(tok);
  if (auto extra = tok.next(); extra && *extra != "meta")
    throw ParseError("trailing data after colours: '" + *extra + "'");
  return c;
}

void write_amalgam(std::ostream& out, const AmalgamColouring& a) {
  write_colouring(out, a.colouring);
  out << "meta " << a.meta.tuples.size() << ' ' << a.meta.left_size << ' ' << a.meta.right_size
      << '\n';
  for (std::size_t id = 0; id < a.meta.tuples.size(); ++id) {
    const AmalgamTuple& t = a.meta.tuples[id];
    out << id << ' ';
    component_out(out, t.horizontal) << ' ';
    component_out(out, t.vertical) << ' ' << slope_symbol(t.slope) << ' ';
    if (t.rows)
      out << t.rows->first << ',' << t.rows->second;
    else
      out << '*';
    out << '\n';
  }
}

AmalgamColouring read_amalgam(std::istream& in) {
  Tokens tok(in);
  AmalgamColouring a{read_body(tok), {}};
  tok.expect("meta");
  const std::uint64_t k = tok.number("meta size");
  a.meta.left_size = tok.number("left size");
  a.meta.right_size = tok.number("right size");
  if (k != a.colouring.palette_size()) throw ParseError("meta size differs from palette size");
  if (a.meta.left_size * a.meta.right_size != a.colouring.vertices())
    throw ParseError("grid dimensions do not match vertex count");
  for (std::uint64_t id = 0; id < k; ++id) {
    if (tok.number("meta id") != id) throw ParseError("meta ids must be listed in order");
    AmalgamTuple t;
    t.horizontal = star_or_id(tok.word("component 1"));
    t.vertical = star_or_id(tok.word("component 2"));
    const std::string slope = tok.word("component 3");
    if (slope == "+") t.slope = Slope::plus;
    else if (slope == "-") t.slope = Slope::minus;
    else if (slope == "0") t.slope = Slope::zero;
    else if (slope == "inf") t.slope = Slope::infinity;
    else throw ParseError("bad slope '" + slope + "'");
    const std::string rows = tok.word("component 4");
    if (rows != "*") {
      const auto comma = rows.find(',');
      if (comma == std::string::npos) throw ParseError("bad row pair '" + rows + "'");
      t.rows = std::pair{static_cast<Vertex>(Tokens::to_number(rows.substr(0, comma), "row")),
                         static_cast<Vertex>(Tokens::to_number(rows.substr(comma + 1), "row"))};
    }
    a.meta.tuples.push_back(t);
  }
  return a;
}

void write_colour_map(std::ostream& out, const std::vector<ColourId>& map) {
  out << "cmap 1\nsize " << map.size() << '\n';
  for (std::size_t i = 0; i < map.size(); ++i) out << map[i] << (i + 1 < map.size() ? ' ' : '\n');
}

std::vector<ColourId> read_colour_map(std::istream& in) {
  Tokens tok(in);
  tok.expect("cmap");
  if (tok.number("format version") != 1) throw ParseError("unsupported colour map version");
  tok.expect("size");
  std::vector<ColourId> map(tok.number("map size"));
  for (auto& x : map) x = static_cast<ColourId>(tok.number("colour image"));
  if (auto extra = tok.next()) throw ParseError("trailing data in colour map: '" + *extra + "'");
  return map;
}

void write_graph(std::ostream& out, const GraphSpec& h) {
  out << "v " << h.vertices() << '\n';
  for (auto [a, b] : h.edges()) out << a << ' ' << b << '\n';
}

GraphSpec read_graph(std::istream& in) {
  Tokens tok(in);
  tok.expect("v");
  const std::uint64_t v = tok.number("vertex count");
  std::vector<GraphSpec::Edge> edges;
  while (auto a = tok.next()) {
    const auto i = static_cast<Vertex>(Tokens::to_number(*a, "edge endpoint"));
    const auto j = static_cast<Vertex>(tok.number("edge endpoint"));
    edges.emplace_back(i, j);
  }
  return GraphSpec(v, std::move(edges));
}

Colouring load_colouring(const std::string& path) {
  auto in = open_in(path);
  return read_colouring(in);
}

void save_colouring(const std::string& path, const Colouring& c) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_colouring(out, c);
}

GraphSpec load_graph(const std::string& path) {
  auto in = open_in(path);
  return read_graph(in);
}

}  // namespace egc
