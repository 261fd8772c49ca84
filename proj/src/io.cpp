#include "soakit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "soakit/error.hpp"

namespace soakit {
namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

constexpr std::string_view kSourceTag = "# source: ";

}  // namespace

ArrayFile parse_array(std::string_view text) {
  std::vector<Line> lines;
  std::optional<std::string> source;
  std::size_t number = 0;
  std::size_t last = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(pos, end - pos);
    ++number;
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (l.starts_with(kSourceTag)) {
      if (!source) source = std::string(l.substr(kSourceTag.size()));
    } else if (!l.starts_with("#") && !tokens(l).empty()) {
      lines.push_back({number, l});
    }
    last = number;
    pos = end + 1;
  }

  if (lines.empty()) throw ParseError(last, "missing 'oa <n> <m> <t>' header");
  const auto head = tokens(lines[0].text);
  if (head.size() != 4 || head[0] != "oa") throw ParseError(lines[0].number, "malformed header, expected 'oa <n> <m> <t>'");
  const long long n = to_int(head[1], lines[0].number);
  const long long m = to_int(head[2], lines[0].number);
  const long long t = to_int(head[3], lines[0].number);
  if (n < 1 || m < 1 || t < 0) throw ParseError(lines[0].number, "header needs n >= 1, m >= 1, t >= 0");

  if (lines.size() < 2) throw ParseError(last, "missing level line");
  const auto lv_tok = tokens(lines[1].text);
  if (static_cast<long long>(lv_tok.size()) != m)
    throw ParseError(lines[1].number, "expected " + std::to_string(m) + " level counts");
  std::vector<int> levels;
  for (auto tok : lv_tok) {
    const long long l = to_int(tok, lines[1].number);
    if (l < 1) throw ParseError(lines[1].number, "level counts must be positive");
    levels.push_back(static_cast<int>(l));
  }

  std::size_t body = 2;
  std::optional<ArrayFile::SoaMeta> soa;
  if (lines.size() > 2) {
    const auto meta = tokens(lines[2].text);
    if (!meta.empty() && meta[0] == "base") {
      if (meta.size() != 4 || meta[2] != "power") throw ParseError(lines[2].number, "expected 'base <s> power <t>'");
      soa = ArrayFile::SoaMeta{static_cast<int>(to_int(meta[1], lines[2].number)),
                               static_cast<int>(to_int(meta[3], lines[2].number))};
      body = 3;
    }
  }

  const std::size_t rows = lines.size() - body;
  if (static_cast<long long>(rows) != n)
    throw ParseError(lines[0].number, "header declares " + std::to_string(n) + " runs but the body has " +
                                          std::to_string(rows));
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n * m));
  for (std::size_t i = body; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i].text);
    if (static_cast<long long>(toks.size()) != m)
      throw ParseError(lines[i].number, "expected " + std::to_string(m) + " entries, found " + std::to_string(toks.size()));
    for (std::size_t j = 0; j < toks.size(); ++j) {
      const long long v = to_int(toks[j], lines[i].number);
      if (v < 0 || v >= levels[j])
        throw ParseError(lines[i].number, "entry " + std::to_string(v) + " outside [0," + std::to_string(levels[j]) + ")");
      cells.push_back(static_cast<int>(v));
    }
  }
  return ArrayFile{Array(static_cast<std::size_t>(n), std::move(levels), std::move(cells)), static_cast<int>(t), soa,
                   std::move(source)};
}

std::string emit_array(const ArrayFile& file) {
  std::ostringstream os;
  const Array& a = file.array;
  if (file.source) os << kSourceTag << *file.source << '\n';
  os << "oa " << a.runs() << ' ' << a.factors() << ' ' << file.strength << '\n';
  for (std::size_t j = 0; j < a.factors(); ++j) os << (j ? " " : "") << a.levels()[j];
  os << '\n';
  if (file.soa) os << "base " << file.soa->base << " power " << file.soa->power << '\n';
  for (std::size_t i = 0; i < a.runs(); ++i) {
    for (std::size_t j = 0; j < a.factors(); ++j) os << (j ? " " : "") << a(i, j);
    os << '\n';
  }
  return os.str();
}

ArrayFile read_array_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_array(buf.str());
}

}  // namespace soakit
