#include "drackn/io.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "drackn/number_theory.hpp"

namespace drackn {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

class Reader {
 public:
  Reader(std::istream& in, std::string format) : format_(std::move(format)) {
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
      ++number;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      const auto first = text.find_first_not_of(" \t");
      if (first == std::string::npos || text[first] == '#') continue;
      std::istringstream words(text);
      Line line{number, {}};
      for (std::string w; words >> w;) line.tokens.push_back(w);
      lines_.push_back(std::move(line));
    }
    if (lines_.empty() || lines_[0].tokens.size() != 2 || lines_[0].tokens[0] + " " + lines_[0].tokens[1] != format_)
      throw FormatError("expected header '" + format_ + "' on the first line");
    next_ = 1;
  }

  std::map<std::string, std::string> parameters(std::initializer_list<const char*> required,
                                                std::initializer_list<const char*> optional = {}) {
    const Line& line = take("parameter line");
    std::map<std::string, std::string> out;
    for (const auto& token : line.tokens) {
      const auto eq = token.find('=');
      if (eq == std::string::npos || eq == 0) fail(line, "expected key=value, got '" + token + "'");
      const std::string key = token.substr(0, eq);
      bool known = false;
      for (const char* k : required) known = known || key == k;
      for (const char* k : optional) known = known || key == k;
      if (!known) fail(line, "unknown parameter '" + key + "'");
      if (out.count(key)) fail(line, "duplicate parameter '" + key + "'");
      out[key] = token.substr(eq + 1);
    }
    for (const char* k : required)
      if (!out.count(k)) fail(line, std::string("missing parameter '") + k + "'");
    parameter_line_ = line.number;
    return out;
  }

  const Line& row(std::size_t width, const std::string& what) {
    const Line& line = take(what);
    if (line.tokens.size() != width)
      fail(line, what + " has " + std::to_string(line.tokens.size()) + " entries, expected " + std::to_string(width));
    return line;
  }

  void finish() const {
    if (next_ < lines_.size()) fail(lines_[next_], "unexpected trailing content");
  }

  long integer(const std::string& text, int line_number) const {
    long value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) fail_at(line_number, "expected an integer, got '" + text + "'");
    return value;
  }

  long parameter_integer(const std::string& text) const { return integer(text, parameter_line_); }

  [[noreturn]] void fail(const Line& line, const std::string& message) const { fail_at(line.number, message); }
  [[noreturn]] void fail_at(int number, const std::string& message) const {
    throw FormatError(format_ + ": line " + std::to_string(number) + ": " + message);
  }
  int parameter_line() const { return parameter_line_; }

 private:
  const Line& take(const std::string& what) {
    if (next_ >= lines_.size()) throw FormatError(format_ + ": unexpected end of input, expected " + what);
    return lines_[next_++];
  }

  std::string format_;
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  int parameter_line_ = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string tuple_text(const AbelianGroup& g, int index) {
  if (g.order() == 1) return "0";
  const auto e = g.element(index);
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out;
}

int parse_element(const Reader& reader, const AbelianGroup& g, const std::string& text, int line) {
  if (g.order() == 1) {
    if (text != "0") reader.fail_at(line, "the trivial group has the single element 0, got '" + text + "'");
    return 0;
  }
  const auto parts = split(text, ',');
  if (parts.size() != static_cast<std::size_t>(g.rank()))
    reader.fail_at(line, "element '" + text + "' needs " + std::to_string(g.rank()) + " comma-joined coordinates");
  GroupElement e;
  for (const auto& p : parts) e.push_back(static_cast<int>(reader.integer(p, line)));
  if (!g.contains(e)) reader.fail_at(line, "element '" + text + "' is not reduced for group " + g.to_string());
  return g.index(e);
}

Rational parse_rational(const Reader& reader, const std::string& text, int line) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) reader.fail_at(line, "expected a rational, got '" + text + "'");
  q.canonicalize();
  return q;
}

int checked_size(const Reader& reader, long n, long limit) {
  if (n < 1 || n > limit) reader.fail_at(reader.parameter_line(), "n=" + std::to_string(n) + " out of range");
  return static_cast<int>(n);
}

}  // namespace

AbelianGroup parse_group(const std::string& text) {
  if (text == "1") return AbelianGroup();
  std::vector<int> orders;
  for (const auto& part : split(text, ',')) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || value < 2)
      throw FormatError("group '" + text + "': factor orders must be integers >= 2");
    orders.push_back(value);
  }
  try {
    return AbelianGroup(orders);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("group '") + text + "': " + e.what());
  }
}

ArcMatrix parse_cover(std::istream& in) {
  Reader reader(in, "DRACKN-COVER v1");
  auto params = reader.parameters({"n", "group"});
  const int n = checked_size(reader, reader.parameter_integer(params["n"]), 1 << 14);
  ArcMatrix f(n, parse_group(params["group"]));
  for (int u = 0; u < n; ++u) {
    const Line& line = reader.row(static_cast<std::size_t>(n), "row " + std::to_string(u));
    for (int v = 0; v < n; ++v) {
      const auto& token = line.tokens[static_cast<std::size_t>(v)];
      if (u == v) {
        if (token != ".") reader.fail(line, "diagonal entry must be '.'");
        continue;
      }
      if (token == ".") reader.fail(line, "'.' is only allowed on the diagonal");
      f.set(u, v, parse_element(reader, f.group(), token, line.number));
    }
  }
  reader.finish();
  return f;
}

std::string emit_cover(const ArcMatrix& f) {
  std::ostringstream out;
  out << "DRACKN-COVER v1\n" << "n=" << f.n() << " group=" << f.group().to_string() << '\n';
  for (int u = 0; u < f.n(); ++u) {
    for (int v = 0; v < f.n(); ++v) {
      if (v) out << ' ';
      out << (u == v ? std::string(".") : tuple_text(f.group(), f.at(u, v)));
    }
    out << '\n';
  }
  return out.str();
}

SeidelMatrix parse_seidel(std::istream& in) {
  Reader reader(in, "SEIDEL v1");
  auto params = reader.parameters({"n", "r"}, {"field"});
  const int n = checked_size(reader, reader.parameter_integer(params["n"]), 1 << 12);
  const auto un = static_cast<std::size_t>(n);
  SeidelMatrix s;
  if (params["r"] == "generic") {
    int q = 2;
    if (params.count("field")) {
      q = static_cast<int>(reader.parameter_integer(params["field"]));
      if (!is_prime(q)) reader.fail_at(reader.parameter_line(), "field=" + params["field"] + " is not prime");
    }
    s.entries = Matrix<CycNum>(un, un, CycNum(q));
    for (std::size_t u = 0; u < un; ++u) {
      const Line& line = reader.row(un, "row " + std::to_string(u));
      for (std::size_t v = 0; v < un; ++v) {
        const auto& token = line.tokens[v];
        if (u == v) {
          if (token != ".") reader.fail(line, "diagonal entry must be '.'");
          continue;
        }
        const auto parts = split(token, ',');
        if (parts.size() != static_cast<std::size_t>(q - 1))
          reader.fail(line, "entry '" + token + "' needs " + std::to_string(q - 1) + " coefficients");
        std::vector<Rational> coeffs;
        for (const auto& p : parts) coeffs.push_back(parse_rational(reader, p, line.number));
        s.entries(u, v) = CycNum(q, std::move(coeffs));
      }
    }
  } else {
    if (params.count("field")) reader.fail_at(reader.parameter_line(), "field= is only allowed with r=generic");
    const long r = reader.parameter_integer(params["r"]);
    if (r < 2 || r > 1000 || !is_prime(r)) reader.fail_at(reader.parameter_line(), "r=" + params["r"] + " is not a prime");
    const int q = static_cast<int>(r);
    s.root_order = q;
    s.entries = Matrix<CycNum>(un, un, CycNum(q));
    for (std::size_t u = 0; u < un; ++u) {
      const Line& line = reader.row(un, "row " + std::to_string(u));
      for (std::size_t v = 0; v < un; ++v) {
        const auto& token = line.tokens[v];
        if (u == v) {
          if (token != ".") reader.fail(line, "diagonal entry must be '.'");
          continue;
        }
        const long k = reader.integer(token, line.number);
        if (k < 0 || k >= r) reader.fail(line, "exponent " + token + " out of range [0, " + std::to_string(r) + ")");
        s.entries(u, v) = CycNum::zeta_power(q, k);
      }
    }
  }
  reader.finish();
  return s;
}

std::string emit_seidel(const SeidelMatrix& s) {
  std::ostringstream out;
  const std::size_t n = s.n();
  out << "SEIDEL v1\n";
  if (s.root_order) {
    out << "n=" << n << " r=" << *s.root_order << '\n';
  } else {
    out << "n=" << n << " r=generic";
    if (s.field() != 2) out << " field=" << s.field();
    out << '\n';
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v) out << ' ';
      if (u == v) {
        out << '.';
      } else if (s.root_order) {
        const auto k = s.entries(u, v).root_of_unity_exponent();
        if (!k) throw std::invalid_argument("emit_seidel: entry is not a root of unity");
        out << *k;
      } else {
        const auto& c = s.entries(u, v).coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i].get_str();
      }
    }
    out << '\n';
  }
  return out.str();
}

GHMatrix parse_gh(std::istream& in) {
  Reader reader(in, "GH v1");
  auto params = reader.parameters({"n", "group"});
  const int n = checked_size(reader, reader.parameter_integer(params["n"]), 1 << 14);
  GHMatrix h(parse_group(params["group"]), n);
  for (int u = 0; u < n; ++u) {
    const Line& line = reader.row(static_cast<std::size_t>(n), "row " + std::to_string(u));
    for (int v = 0; v < n; ++v) h.set(u, v, parse_element(reader, h.group, line.tokens[static_cast<std::size_t>(v)], line.number));
  }
  reader.finish();
  return h;
}

std::string emit_gh(const GHMatrix& h) {
  std::ostringstream out;
  out << "GH v1\n" << "n=" << h.n << " group=" << h.group.to_string() << '\n';
  for (int u = 0; u < h.n; ++u) {
    for (int v = 0; v < h.n; ++v) out << (v ? " " : "") << tuple_text(h.group, h.at(u, v));
    out << '\n';
  }
  return out.str();
}

AlternatingForm parse_form(std::istream& in) {
  Reader reader(in, "FORM v1");
  auto params = reader.parameters({"p", "m", "s"});
  AlternatingForm form;
  form.p = static_cast<int>(reader.parameter_integer(params["p"]));
  form.m = static_cast<int>(reader.parameter_integer(params["m"]));
  form.s = static_cast<int>(reader.parameter_integer(params["s"]));
  if (form.p < 2 || form.m < 1 || form.m > 64 || form.s < 1 || form.s > form.m)
    reader.fail_at(reader.parameter_line(), "need p >= 2 and 1 <= s <= m <= 64");
  const auto m = static_cast<std::size_t>(form.m);
  for (int k = 0; k < form.s; ++k) {
    std::vector<std::vector<int>> mat;
    for (std::size_t i = 0; i < m; ++i) {
      const Line& line = reader.row(m, "matrix " + std::to_string(k) + " row " + std::to_string(i));
      std::vector<int> row;
      for (const auto& t : line.tokens) row.push_back(static_cast<int>(mod_floor(reader.integer(t, line.number), form.p)));
      mat.push_back(std::move(row));
    }
    form.matrices.push_back(std::move(mat));
  }
  reader.finish();
  return form;
}

std::string emit_form(const AlternatingForm& form) {
  std::ostringstream out;
  out << "FORM v1\n" << "p=" << form.p << " m=" << form.m << " s=" << form.s << '\n';
  for (const auto& mat : form.matrices)
    for (const auto& row : mat) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << '\n';
    }
  return out.str();
}

SkewProduct parse_skew(std::istream& in) {
  Reader reader(in, "SKEW v1");
  auto params = reader.parameters({"t", "d"});
  const long t = reader.parameter_integer(params["t"]);
  const long d = reader.parameter_integer(params["d"]);
  if (t < 1 || d < 1 || t * d > 16) reader.fail_at(reader.parameter_line(), "need t, d >= 1 and td <= 16");
  const auto dim = static_cast<std::size_t>(t * d);
  std::vector<std::vector<FiniteField::Code>> basis;
  for (std::size_t i = 0; i < dim; ++i) {
    const Line& line = reader.row(dim, "row " + std::to_string(i));
    std::vector<FiniteField::Code> row;
    for (const auto& token : line.tokens) {
      const long c = reader.integer(token, line.number);
      if (c < 0 || c >= (1L << dim)) reader.fail(line, "code " + token + " out of range");
      row.push_back(static_cast<FiniteField::Code>(c));
    }
    basis.push_back(std::move(row));
  }
  reader.finish();
  try {
    return SkewProduct(static_cast<int>(t), static_cast<int>(d), std::move(basis));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("SKEW v1: ") + e.what());
  }
}

std::string emit_skew(const SkewProduct& skew) {
  std::ostringstream out;
  out << "SKEW v1\n" << "t=" << skew.t() << " d=" << skew.d() << '\n';
  for (const auto& row : skew.basis_products()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

LatinSquare parse_latin(std::istream& in) {
  Reader reader(in, "LATIN v1");
  auto params = reader.parameters({"t"});
  const long t = reader.parameter_integer(params["t"]);
  if (t < 1 || t > 8) reader.fail_at(reader.parameter_line(), "need 1 <= t <= 8");
  const auto q = static_cast<std::size_t>(1) << t;
  LatinSquare square{static_cast<int>(t), {}};
  for (std::size_t i = 0; i < q; ++i) {
    const Line& line = reader.row(q, "row " + std::to_string(i));
    std::vector<FiniteField::Code> row;
    for (const auto& token : line.tokens) {
      const long c = reader.integer(token, line.number);
      if (c < 0 || static_cast<std::size_t>(c) >= q) reader.fail(line, "code " + token + " out of range");
      row.push_back(static_cast<FiniteField::Code>(c));
    }
    square.entries.push_back(std::move(row));
  }
  reader.finish();
  return square;
}

std::string emit_latin(const LatinSquare& square) {
  std::ostringstream out;
  out << "LATIN v1\n" << "t=" << square.t << '\n';
  for (const auto& row : square.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

std::string emit_gram(const LineSet& lines, const std::string& label) {
  std::ostringstream out;
  const auto& g = lines.gram;
  for (std::size_t u = 0; u < g.rows(); ++u) {
    out << "# GRAM " << label << ' ' << u << ':';
    for (std::size_t v = 0; v < g.cols(); ++v) {
      const auto& x = g(u, v);
      out << (v ? " ; " : " ") << x.base().to_string();
      if (!x.in_base_field()) out << " + (" << x.surd().to_string() << ")*sqrt(" << x.radicand().get_str() << ')';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace drackn
