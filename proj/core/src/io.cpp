#include "turan/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "turan/error.hpp"

namespace turan {

namespace {

using Kind = ParseError::Kind;

struct Line {
  std::string_view text;
  int number;
};

std::vector<Line> split_lines(std::string_view input) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t start = 0;
  while (start <= input.size()) {
    std::size_t end = input.find('\n', start);
    if (end == std::string_view::npos) end = input.size();
    std::string_view text = input.substr(start, end - start);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    lines.push_back({text, number++});
    if (end == input.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_comment(std::string_view text) {
  const auto t = tokens(text);
  return !t.empty() && t.front().front() == '#';
}

bool is_blank(std::string_view text) { return tokens(text).empty(); }

struct Family {
  int n = 0;
  int arity = 0;
  std::vector<ElementSet> sets;
  std::vector<int> line_of;
};

// Shared reader for MATROID v1 and HYPERGRAPH v1.
Family read_family(std::string_view input, std::string_view magic, std::string_view arity_key,
                   std::string_view count_key) {
  const std::vector<Line> lines = split_lines(input);
  std::size_t pos = 0;
  auto next_content = [&]() -> const Line* {
    while (pos < lines.size() && (is_comment(lines[pos].text) || is_blank(lines[pos].text))) ++pos;
    return pos < lines.size() ? &lines[pos++] : nullptr;
  };

  const Line* header = next_content();
  if (!header || tokens(header->text) != std::vector<std::string_view>{magic, "v1"}) {
    throw ParseError(Kind::malformed_header, header ? header->number : 1,
                     "expected '" + std::string(magic) + " v1'");
  }
  const Line* dims = next_content();
  Family fam;
  {
    const auto t = dims ? tokens(dims->text) : std::vector<std::string_view>{};
    std::optional<long long> n, k;
    if (t.size() == 4 && t[0] == "n" && t[2] == arity_key) {
      n = to_int(t[1]);
      k = to_int(t[3]);
    }
    if (!n || !k || *n < 0 || *n > kMaxElements || *k < 0 || *k > *n) {
      throw ParseError(Kind::malformed_header, dims ? dims->number : header->number + 1,
                       "expected 'n <int> " + std::string(arity_key) + " <int>' with 0 <= " +
                           std::string(arity_key) + " <= n <= 64");
    }
    fam.n = static_cast<int>(*n);
    fam.arity = static_cast<int>(*k);
  }
  const Line* count_line = next_content();
  long long count = -1;
  {
    const auto t = count_line ? tokens(count_line->text) : std::vector<std::string_view>{};
    if (t.size() == 2 && t[0] == count_key) count = to_int(t[1]).value_or(-1);
    if (count < 0) {
      throw ParseError(Kind::malformed_header, count_line ? count_line->number : dims->number + 1,
                       "expected '" + std::string(count_key) + " <count>'");
    }
  }
  if (count == 0) throw ParseError(Kind::empty_bases, count_line->number, std::string(count_key) + " nonempty");

  for (long long i = 0; i < count; ++i) {
    // A rank-0 basis is an empty line, so blank lines count here; comments do not.
    while (pos < lines.size() && is_comment(lines[pos].text)) ++pos;
    if (pos >= lines.size()) {
      throw ParseError(Kind::malformed_line, lines.back().number,
                       "expected " + std::to_string(count) + " " + std::string(count_key) + " lines, found " +
                           std::to_string(i));
    }
    const Line& line = lines[pos++];
    ElementSet s;
    int previous = -1;
    for (std::string_view tok : tokens(line.text)) {
      const auto v = to_int(tok);
      if (!v) throw ParseError(Kind::malformed_line, line.number, "not an integer: '" + std::string(tok) + "'");
      if (*v < 0 || *v >= fam.n) {
        throw ParseError(Kind::index_out_of_range, line.number,
                         "index " + std::to_string(*v) + " outside [0, " + std::to_string(fam.n) + ")");
      }
      if (*v <= previous) throw ParseError(Kind::malformed_line, line.number, "indices must be strictly ascending");
      previous = static_cast<int>(*v);
      s = s.with(previous);
    }
    if (s.size() != fam.arity) {
      throw ParseError(Kind::arity_mismatch, line.number,
                       "set has " + std::to_string(s.size()) + " elements, expected " + std::to_string(fam.arity));
    }
    fam.sets.push_back(s);
    fam.line_of.push_back(line.number);
  }
  while (pos < lines.size()) {
    if (!is_comment(lines[pos].text) && !is_blank(lines[pos].text)) {
      throw ParseError(Kind::malformed_line, lines[pos].number, "unexpected content after last set");
    }
    ++pos;
  }
  return fam;
}

Matroid validated(Family fam) {
  if (auto bad = find_exchange_violation(fam.sets)) {
    int line = 0;
    for (std::size_t i = 0; i < fam.sets.size(); ++i) {
      if (fam.sets[i] == bad->first) line = fam.line_of[i];
    }
    throw ParseError(Kind::exchange_failure, line,
                     "basis exchange fails between " + format_set(bad->first) + " and " + format_set(bad->second) +
                         " at element " + std::to_string(bad->element));
  }
  return Matroid::from_bases_unchecked(fam.n, fam.arity, std::move(fam.sets));
}

void write_sets(std::ostringstream& out, const std::vector<ElementSet>& sets) {
  for (ElementSet s : sets) {
    bool first = true;
    for (int e : s) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
}

nlohmann::json sets_json(const std::vector<ElementSet>& sets) {
  nlohmann::json arr = nlohmann::json::array();
  for (ElementSet s : sets) arr.push_back(s.elements());
  return arr;
}

}  // namespace

std::string format_set(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string to_text(const Matroid& m, const std::vector<std::string>& comments) {
  std::ostringstream out;
  out << "MATROID v1\n" << "n " << m.size() << " r " << m.rank() << '\n' << "bases " << m.basis_count() << '\n';
  write_sets(out, m.bases());
  for (const std::string& c : comments) out << "# " << c << '\n';
  return out.str();
}

std::string to_text(const UniformHypergraph& h) {
  std::ostringstream out;
  out << "HYPERGRAPH v1\n" << "n " << h.vertex_count() << " k " << h.arity() << '\n' << "edges " << h.edge_count()
      << '\n';
  write_sets(out, h.edges());
  return out.str();
}

nlohmann::json to_json(const Matroid& m) {
  return nlohmann::json{{"n", m.size()}, {"r", m.rank()}, {"bases", sets_json(m.bases())}};
}

nlohmann::json to_json(const UniformHypergraph& h) {
  return nlohmann::json{{"n", h.vertex_count()}, {"k", h.arity()}, {"edges", sets_json(h.edges())}};
}

Matroid matroid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("bases") || !j["n"].is_number_integer() ||
      !j["r"].is_number_integer() || !j["bases"].is_array()) {
    throw ParseError(Kind::malformed_header, 0, "JSON matroid needs integer n, r and array bases");
  }
  Family fam;
  fam.n = j["n"].get<int>();
  fam.arity = j["r"].get<int>();
  if (fam.n < 0 || fam.n > kMaxElements || fam.arity < 0 || fam.arity > fam.n) {
    throw ParseError(Kind::malformed_header, 0, "need 0 <= r <= n <= 64");
  }
  if (j["bases"].empty()) throw ParseError(Kind::empty_bases, 0, "bases nonempty");
  int index = 0;
  for (const auto& basis : j["bases"]) {
    if (!basis.is_array()) throw ParseError(Kind::malformed_line, 0, "basis " + std::to_string(index) + " not an array");
    ElementSet s;
    int previous = -1;
    for (const auto& v : basis) {
      if (!v.is_number_integer()) throw ParseError(Kind::malformed_line, 0, "non-integer index");
      const int e = v.get<int>();
      if (e < 0 || e >= fam.n) throw ParseError(Kind::index_out_of_range, 0, "index " + std::to_string(e) + " out of range");
      if (e <= previous) throw ParseError(Kind::malformed_line, 0, "indices must be strictly ascending");
      previous = e;
      s = s.with(e);
    }
    if (s.size() != fam.arity) throw ParseError(Kind::arity_mismatch, 0, "basis size differs from r");
    fam.sets.push_back(s);
    fam.line_of.push_back(0);
    ++index;
  }
  return validated(std::move(fam));
}

Matroid parse_matroid(std::string_view input) {
  const std::size_t first = input.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && input[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(input);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(Kind::malformed_header, 0, std::string("invalid JSON: ") + e.what());
    }
    return matroid_from_json(j);
  }
  return validated(read_family(input, "MATROID", "r", "bases"));
}

UniformHypergraph parse_hypergraph(std::string_view input) {
  Family fam = read_family(input, "HYPERGRAPH", "k", "edges");
  return UniformHypergraph(fam.n, fam.arity, std::move(fam.sets));
}

}  // namespace turan
