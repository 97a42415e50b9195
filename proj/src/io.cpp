#include "spi/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace spi {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

template <class Int>
Int to_int(std::string_view s, int line) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(tokenize(text)) {}

  bool done() const { return pos_ == lines_.size(); }
  bool peek(std::string_view keyword) const {
    return !done() && lines_[pos_].tokens[0] == keyword;
  }

  const Line& expect(std::string_view keyword, std::size_t args) {
    const Line& l = expect_at_least(keyword, args);
    if (l.tokens.size() != args + 1) throw ParseError(l.number, "wrong number of fields");
    return l;
  }

  const Line& expect_at_least(std::string_view keyword, std::size_t args) {
    if (done()) throw ParseError(last_line(), "expected '" + std::string(keyword) + "'");
    const Line& l = lines_[pos_];
    if (l.tokens[0] != keyword) {
      throw ParseError(l.number, "expected '" + std::string(keyword) + "', got '" + l.tokens[0] + "'");
    }
    if (l.tokens.size() < args + 1) throw ParseError(l.number, "missing fields");
    ++pos_;
    return l;
  }

  void finish() const {
    if (!done()) throw ParseError(lines_[pos_].number, "unexpected '" + lines_[pos_].tokens[0] + "'");
  }

  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

// "key=value" -> value
template <class Int>
Int keyed(const Line& l, std::size_t at, std::string_view key) {
  const std::string& tok = l.tokens[at];
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) throw ParseError(l.number, "expected " + prefix);
  return to_int<Int>(std::string_view(tok).substr(prefix.size()), l.number);
}

PrimeField parse_field(Cursor& c) {
  const Line& l = c.expect("field", 1);
  try {
    return PrimeField(keyed<std::uint64_t>(l, 1, "p"));
  } catch (const InvalidArgument& e) {
    throw ParseError(l.number, e.what());
  }
}

Basis parse_basis(Cursor& c) {
  const Line& l = c.expect("basis", 1);
  if (l.tokens[1] == "power") return Basis::PowerLaurent;
  if (l.tokens[1] == "cheb1") return Basis::Chebyshev1;
  throw ParseError(l.number, "unknown basis '" + l.tokens[1] + "'");
}

SparsePoly parse_terms(Cursor& c, std::string_view header, const PrimeField& F, Basis basis) {
  const Line& h = c.expect(header, 1);
  const int t = keyed<int>(h, 1, "t");
  if (t < 0) throw ParseError(h.number, "negative term count");
  std::vector<Term> terms;
  for (int k = 0; k < t; ++k) {
    const Line& l = c.expect("term", 2);
    terms.push_back({to_int<std::int64_t>(l.tokens[1], l.number),
                     F(to_int<std::int64_t>(l.tokens[2], l.number))});
  }
  try {
    SparsePoly f(basis, std::move(terms));
    if (static_cast<int>(f.sparsity()) != t) throw ParseError(h.number, "repeated or zero terms");
    return f;
  } catch (const InvalidArgument& e) {
    throw ParseError(h.number, e.what());
  }
}

void write_terms(std::ostream& os, std::string_view header, const SparsePoly& f) {
  os << header << " t=" << f.sparsity() << "\n";
  for (const Term& t : f.terms()) os << "term " << t.degree << " " << t.coeff.residue() << "\n";
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  std::ostringstream os;
  os << "%SPI 1\n";
  os << "field p=" << inst.field.modulus() << "\n";
  os << "basis " << basis_name(inst.basis) << "\n";
  os << "bounds B=" << inst.B << " D=" << inst.D << " E=" << inst.E << "\n";
  os << "seed " << inst.seed << "\n";
  write_terms(os, "poly", inst.hidden);
  os << "errors k=" << inst.errors.size() << "\n";
  for (const auto& [pt, v] : inst.errors) os << "err " << pt.residue() << " " << v.residue() << "\n";
  if (!inst.probes.empty()) {
    os << "probes k=" << inst.probes.size() << "\n";
    for (const Felt& pt : inst.probes) os << "pt " << pt.residue() << "\n";
  }
  return os.str();
}

Instance parse_instance(std::string_view text) {
  Cursor c(text);
  const Line& magic = c.expect("%SPI", 1);
  if (magic.tokens[1] != "1") throw ParseError(magic.number, "unsupported version");
  const PrimeField F = parse_field(c);
  const Basis basis = parse_basis(c);
  const Line& b = c.expect("bounds", 3);
  const int B = keyed<int>(b, 1, "B");
  const int D = keyed<int>(b, 2, "D");
  const int E = keyed<int>(b, 3, "E");
  if (B < 1 || D < 1 || E < 0) throw ParseError(b.number, "need B >= 1, D >= 1, E >= 0");
  const Line& s = c.expect("seed", 1);
  const auto seed = to_int<std::uint64_t>(s.tokens[1], s.number);
  SparsePoly hidden = parse_terms(c, "poly", F, basis);
  if (static_cast<int>(hidden.sparsity()) > B || hidden.max_abs_degree() > D) {
    throw ParseError(b.number, "hidden polynomial exceeds the bounds");
  }

  const Line& eh = c.expect("errors", 1);
  const int k = keyed<int>(eh, 1, "k");
  if (k < 0) throw ParseError(eh.number, "negative error count");
  ErrorPlan errors;
  for (int i = 0; i < k; ++i) {
    const Line& l = c.expect("err", 2);
    const Felt pt = F(to_int<std::int64_t>(l.tokens[1], l.number));
    const Felt v = F(to_int<std::int64_t>(l.tokens[2], l.number));
    if (!errors.emplace(pt, v).second) throw ParseError(l.number, "duplicate error point");
  }

  std::vector<Felt> probes;
  if (c.peek("probes")) {
    const Line& ph = c.expect("probes", 1);
    const int n = keyed<int>(ph, 1, "k");
    if (n < 0) throw ParseError(ph.number, "negative probe count");
    for (int i = 0; i < n; ++i) {
      const Line& l = c.expect("pt", 1);
      probes.push_back(F(to_int<std::int64_t>(l.tokens[1], l.number)));
    }
  }
  c.finish();
  return Instance{F, basis, B, D, E, seed, std::move(hidden), std::move(errors), std::move(probes)};
}

std::string serialize_result(const ResultFile& result) {
  std::ostringstream os;
  os << "%SPI-RESULT 1\n";
  os << "field p=" << result.field.modulus() << "\n";
  os << "basis " << basis_name(result.basis) << "\n";
  os << "N " << result.N << "\n";
  for (const Candidate& cand : result.candidates) {
    write_terms(os, "candidate", cand.poly);
    os << "mismatches " << cand.mismatches.size();
    for (const Position& p : cand.mismatches) os << " " << p.block << ":" << p.index;
    os << "\n";
  }
  return os.str();
}

ResultFile parse_result(std::string_view text) {
  Cursor c(text);
  const Line& magic = c.expect("%SPI-RESULT", 1);
  if (magic.tokens[1] != "1") throw ParseError(magic.number, "unsupported version");
  const PrimeField F = parse_field(c);
  const Basis basis = parse_basis(c);
  const Line& n = c.expect("N", 1);
  ResultFile out{F, basis, to_int<int>(n.tokens[1], n.number), {}};
  while (c.peek("candidate")) {
    SparsePoly f = parse_terms(c, "candidate", F, basis);
    const Line* ml = &c.expect_at_least("mismatches", 1);
    const auto count = to_int<std::size_t>(ml->tokens[1], ml->number);
    if (ml->tokens.size() != count + 2) throw ParseError(ml->number, "mismatch count disagrees");
    std::vector<Position> pos;
    for (std::size_t i = 2; i < ml->tokens.size(); ++i) {
      const std::string& tok = ml->tokens[i];
      const auto colon = tok.find(':');
      if (colon == std::string::npos) throw ParseError(ml->number, "expected <block>:<index>");
      pos.push_back({to_int<int>(std::string_view(tok).substr(0, colon), ml->number),
                     to_int<int>(std::string_view(tok).substr(colon + 1), ml->number)});
    }
    out.candidates.push_back({std::move(f), std::move(pos)});
  }
  c.finish();
  return out;
}

std::string serialize_poly(const SparsePoly& f) {
  std::ostringstream os;
  write_terms(os, "poly", f);
  return os.str();
}

SparsePoly parse_poly(std::string_view text, const PrimeField& field, Basis basis) {
  Cursor c(text);
  SparsePoly f = parse_terms(c, "poly", field, basis);
  c.finish();
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace spi
