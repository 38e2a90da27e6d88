#include "gw/text_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gw {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

bool is_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t");
  return pos != std::string::npos && line[pos] == '#';
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

long parse_long(const std::string& tok, const char* what) {
  size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("cannot parse ") + what + " '" + tok + "'");
  }
  if (used != tok.size())
    throw std::runtime_error(std::string("cannot parse ") + what + " '" + tok + "'");
  return value;
}

// "[a,b,c]" or "[]"
std::vector<long> parse_bracket_list(const std::string& tok, const char* what) {
  if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
    throw std::runtime_error(std::string("expected bracketed list for ") + what + ", got '" +
                             tok + "'");
  std::vector<long> values;
  const std::string body = tok.substr(1, tok.size() - 2);
  if (body.empty()) return values;
  std::istringstream in(body);
  std::string piece;
  while (std::getline(in, piece, ',')) values.push_back(parse_long(piece, what));
  if (!body.empty() && body.back() == ',')
    throw std::runtime_error(std::string("trailing comma in ") + what);
  return values;
}

IntMatrix matrix_from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.size() == 1 && rows[0].empty()) return IntMatrix();
  return IntMatrix::from_rows(rows);
}

std::vector<std::vector<long>> parse_matrix_block(const std::vector<std::string>& lines,
                                                  size_t begin, size_t end) {
  std::vector<std::vector<long>> rows;
  for (size_t i = begin; i < end; ++i) {
    if (is_comment(lines[i])) continue;
    const auto toks = tokens_of(lines[i]);
    if (toks.size() == 1 && toks[0] == "[]") {
      rows.push_back({});
      continue;
    }
    std::vector<long> row;
    row.reserve(toks.size());
    for (const auto& t : toks) row.push_back(parse_long(t, "matrix entry"));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
  const auto lines = split_lines(text);
  std::vector<std::string> meat;
  for (const auto& l : lines)
    if (!is_blank(l) && !is_comment(l)) meat.push_back(l);
  if (meat.empty()) return IntMatrix();
  const auto rows = parse_matrix_block(meat, 0, meat.size());
  return matrix_from_rows(rows);
}

std::string matrix_text(const IntMatrix& m) {
  if (m.size() == 0) return "[]\n";
  std::string out;
  for (long i = 0; i < m.size(); ++i) {
    for (long j = 0; j < m.size(); ++j) {
      if (j > 0) out += " ";
      out += m.at(i, j).get_str();
    }
    out += "\n";
  }
  return out;
}

HomologyAction parse_homology_action(const std::string& text) {
  const auto lines = split_lines(text);
  std::vector<IntMatrix> maps;
  std::vector<std::string> block;
  auto flush = [&]() {
    if (block.empty()) return;
    const auto rows = parse_matrix_block(block, 0, block.size());
    maps.push_back(matrix_from_rows(rows));
    block.clear();
  };
  for (const auto& line : lines) {
    if (is_blank(line)) {
      flush();
    } else if (!is_comment(line)) {
      block.push_back(line);
    }
  }
  flush();
  if (maps.empty()) throw std::runtime_error("homology action file has no matrix blocks");
  return HomologyAction(std::move(maps));
}

RelTable parse_rel_table(const std::string& text) {
  const auto lines = split_lines(text);
  size_t i = 0;
  while (i < lines.size() && (is_blank(lines[i]) || is_comment(lines[i]))) ++i;
  if (i == lines.size() || tokens_of(lines[i]) != std::vector<std::string>{"gt-table"})
    throw std::runtime_error("relative table must start with a 'gt-table' header line");
  RelTable table;
  for (++i; i < lines.size(); ++i) {
    if (is_blank(lines[i]) || is_comment(lines[i])) continue;
    const auto toks = tokens_of(lines[i]);
    if (toks.size() != 5)
      throw std::runtime_error("table record needs 5 fields: euler b1 b2 [contacts] count");
    RelEntry e;
    e.euler = parse_long(toks[0], "euler characteristic");
    e.bidegree = {parse_long(toks[1], "bidegree"), parse_long(toks[2], "bidegree")};
    e.contacts = parse_bracket_list(toks[3], "contacts");
    e.count = Rational::parse(toks[4]);
    table.add(std::move(e));
  }
  return table;
}

std::string rel_table_text(const RelTable& table) {
  std::string out = "gt-table\n";
  for (const auto& [key, count] : table.entries()) {
    const auto& [euler, bidegree, contacts] = key;
    out += std::to_string(euler) + " " + std::to_string(bidegree.first) + " " +
           std::to_string(bidegree.second) + " [";
    for (size_t k = 0; k < contacts.size(); ++k) {
      if (k > 0) out += ",";
      out += std::to_string(contacts[k]);
    }
    out += "] " + count.str() + "\n";
  }
  return out;
}

SMatrix parse_smatrix(const std::string& text) {
  const auto lines = split_lines(text);
  size_t i = 0;
  while (i < lines.size() && (is_blank(lines[i]) || is_comment(lines[i]))) ++i;
  if (i == lines.size() || tokens_of(lines[i]) != std::vector<std::string>{"s-matrix"})
    throw std::runtime_error("s-matrix must start with an 's-matrix' header line");
  SMatrix s;
  bool base_seen = false;
  for (++i; i < lines.size(); ++i) {
    if (is_blank(lines[i]) || is_comment(lines[i])) continue;
    const auto toks = tokens_of(lines[i]);
    if (!base_seen && toks.size() == 2 && toks[0] == "base") {
      if (toks[1] == "identity")
        s.set_identity_base(true);
      else if (toks[1] == "zero")
        s.set_identity_base(false);
      else
        throw std::runtime_error("s-matrix base must be 'identity' or 'zero'");
      base_seen = true;
      continue;
    }
    if (toks.size() != 4)
      throw std::runtime_error("s-matrix record needs 4 fields: [contacts] db1 db2 weight");
    auto contacts = parse_bracket_list(toks[0], "contacts");
    for (long c : contacts)
      if (c < 1) throw std::runtime_error("s-matrix contacts must be >= 1");
    SMatrix::Term term{{parse_long(toks[1], "bidegree shift"), parse_long(toks[2], "bidegree shift")},
                       Rational::parse(toks[3])};
    s.add_term(std::move(contacts), std::move(term));
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace gw
