#include "galie/format.hpp"

#include <sstream>

namespace galie {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// logical lines with comments removed and line numbers kept
std::vector<std::pair<std::size_t, std::string>> logical_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t lineno = 0;
  for (std::string raw : split(text, '\n')) {
    ++lineno;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = strip(raw);
    if (!raw.empty()) out.emplace_back(lineno, raw);
  }
  return out;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& msg) {
  throw FormatError("line " + std::to_string(lineno) + ": " + msg);
}

std::size_t parse_size(std::size_t lineno, const std::string& tok, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size() || v < 0) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (...) {
    fail(lineno, "expected a non-negative integer for " + what + ", got '" + tok + "'");
  }
}

Vec parse_vector_at(const Field& f, std::size_t lineno, const std::string& csv) {
  Vec v;
  for (const std::string& part : split(csv, ',')) {
    auto s = Scalar::parse(f, strip(part));
    if (!s) fail(lineno, "bad scalar '" + strip(part) + "'");
    v.push_back(*s);
  }
  return v;
}

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
  std::optional<Field> f;
  std::optional<std::size_t> dim;
  std::vector<std::string> names;
  std::vector<BracketEntry> entries;
  std::vector<bool> seen;
  for (auto& [lineno, line] : logical_lines(text)) {
    if (line.rfind("field", 0) == 0) {
      f = Field::parse(strip(line.substr(5)));
      if (!f) fail(lineno, "bad field descriptor '" + strip(line.substr(5)) + "'");
    } else if (line.rfind("dim", 0) == 0) {
      dim = parse_size(lineno, strip(line.substr(3)), "dim");
      seen.assign(*dim * *dim, false);
    } else if (line.rfind("names", 0) == 0) {
      std::istringstream in(line.substr(5));
      std::string tok;
      while (in >> tok) names.push_back(tok);
    } else if (line[0] == '[') {
      if (!f || !dim) fail(lineno, "bracket entry before the field/dim headers");
      std::size_t close = line.find(']');
      if (close == std::string::npos) fail(lineno, "missing ']'");
      auto idx = split(line.substr(1, close - 1), ',');
      if (idx.size() != 2) fail(lineno, "expected two indices in '[i,j]'");
      std::size_t i = parse_size(lineno, strip(idx[0]), "index i");
      std::size_t j = parse_size(lineno, strip(idx[1]), "index j");
      if (i < 1 || j < 1 || i > *dim || j > *dim) fail(lineno, "index out of range");
      if (i >= j) fail(lineno, "indices must satisfy i < j");
      std::size_t eq = line.find('=', close);
      if (eq == std::string::npos) fail(lineno, "missing '='");
      Vec val = parse_vector_at(*f, lineno, line.substr(eq + 1));
      if (val.size() != *dim)
        fail(lineno, "expected " + std::to_string(*dim) + " coefficients, got " +
                         std::to_string(val.size()));
      if (seen[(i - 1) * *dim + (j - 1)])
        fail(lineno, "duplicate entry for [" + std::to_string(i) + "," + std::to_string(j) + "]");
      seen[(i - 1) * *dim + (j - 1)] = true;
      entries.push_back(BracketEntry{i - 1, j - 1, std::move(val)});
    } else {
      fail(lineno, "unrecognized line '" + line + "'");
    }
  }
  if (!f) throw FormatError("missing 'field' header");
  if (!dim) throw FormatError("missing 'dim' header");
  if (!names.empty() && names.size() != *dim)
    throw FormatError("names count does not match dim");
  auto r = make_lie_algebra(*f, *dim, entries, std::move(names));
  if (auto* v = std::get_if<JacobiViolation>(&r))
    throw std::invalid_argument("not a Lie algebra: " + v->describe());
  return std::get<LieAlgebra>(std::move(r));
}

std::string serialize_algebra(const LieAlgebra& l) {
  std::ostringstream out;
  out << "field " << l.field().to_string() << "\n";
  out << "dim " << l.dim() << "\n";
  out << "names";
  for (const auto& n : l.basis_names()) out << " " << n;
  out << "\n";
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vec v = l.basis_bracket(i, j);
      if (is_zero(v)) continue;
      out << "[" << i + 1 << "," << j + 1 << "] =";
      for (std::size_t k = 0; k < v.size(); ++k)
        out << (k ? "," : " ") << v[k].to_string();
      out << "\n";
    }
  return out.str();
}

Vec parse_vector(const Field& f, const std::string& csv) {
  Vec v;
  for (const std::string& part : split(csv, ',')) {
    auto s = Scalar::parse(f, strip(part));
    if (!s) throw FormatError("bad scalar '" + strip(part) + "'");
    v.push_back(*s);
  }
  return v;
}

Matrix parse_matrix(const Field& f, const std::string& text) {
  std::vector<Vec> rows;
  for (auto& [lineno, line] : logical_lines(text)) rows.push_back(parse_vector_at(f, lineno, line));
  if (rows.empty()) throw FormatError("empty matrix");
  for (const Vec& r : rows)
    if (r.size() != rows[0].size()) throw FormatError("ragged matrix rows");
  return Matrix::from_rows(f, rows);
}

std::vector<Matrix> parse_matrices(const Field& f, std::size_t dim, const std::string& text) {
  std::vector<Matrix> out;
  std::string block;
  auto flush = [&] {
    if (strip(block).empty()) return;
    Matrix m = parse_matrix(f, block);
    if (m.rows() != dim || m.cols() != dim)
      throw FormatError("expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                        " matrix");
    out.push_back(std::move(m));
    block.clear();
  };
  for (const std::string& line : split(text, '\n')) {
    if (strip(line).empty())
      flush();
    else
      block += line + "\n";
  }
  flush();
  return out;
}

Subspace parse_subspace_spec(const Field& f, std::size_t dim, const std::string& spec) {
  if (spec.rfind("basis:", 0) == 0) {
    std::string rest = strip(spec.substr(6));
    if (rest.empty()) return Subspace::zero(f, dim);
    std::vector<Vec> rows;
    for (const std::string& tok : split(rest, ',')) {
      std::size_t i = parse_size(0, strip(tok), "basis index");
      if (i >= dim) throw FormatError("basis index " + std::to_string(i) + " out of range");
      rows.push_back(unit_vec(f, dim, i));
    }
    return Subspace::row_span(Matrix::from_rows(f, rows));
  }
  if (spec.rfind("rows:", 0) == 0) {
    std::vector<Vec> rows;
    for (const std::string& row : split(spec.substr(5), ';')) {
      Vec v = parse_vector(f, row);
      if (v.size() != dim) throw FormatError("subspace row has wrong length");
      rows.push_back(std::move(v));
    }
    return Subspace::row_span(Matrix::from_rows(f, rows));
  }
  throw FormatError("subspace spec must start with 'basis:' or 'rows:'");
}

ExtendingSystem parse_system(const Field& f, std::size_t n, const std::string& text) {
  std::optional<std::size_t> gdim, vdim;
  ExtendingSystem s;
  bool built = false;
  auto need_built = [&](std::size_t lineno) {
    if (!built) fail(lineno, "entries before the gdim/vdim headers");
  };
  auto read_pair = [&](std::size_t lineno, const std::string& rest, std::size_t amax,
                       std::size_t bmax, std::size_t& a, std::size_t& b, Vec& val,
                       std::size_t vlen) {
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos) fail(lineno, "missing '='");
    std::istringstream in(rest.substr(0, eq));
    std::string ta, tb, extra;
    if (!(in >> ta >> tb) || (in >> extra)) fail(lineno, "expected two indices");
    a = parse_size(lineno, ta, "index");
    b = parse_size(lineno, tb, "index");
    if (a < 1 || a > amax || b < 1 || b > bmax) fail(lineno, "index out of range");
    --a, --b;
    val = parse_vector_at(f, lineno, rest.substr(eq + 1));
    if (val.size() != vlen)
      fail(lineno, "expected " + std::to_string(vlen) + " coefficients");
  };
  for (auto& [lineno, line] : logical_lines(text)) {
    if (line.rfind("gdim", 0) == 0) {
      gdim = parse_size(lineno, strip(line.substr(4)), "gdim");
      if (*gdim != n)
        fail(lineno, "gdim " + std::to_string(*gdim) + " does not match the base algebra (" +
                         std::to_string(n) + ")");
    } else if (line.rfind("vdim", 0) == 0) {
      vdim = parse_size(lineno, strip(line.substr(4)), "vdim");
    } else {
      if (gdim && vdim && !built) {
        s = ExtendingSystem::zero(f, n, *vdim);
        built = true;
      }
      std::size_t a, b;
      Vec val;
      if (line.rfind("left", 0) == 0) {
        need_built(lineno);
        read_pair(lineno, line.substr(4), s.m, s.n, a, b, val, n);
        s.left[a * n + b] = val;
      } else if (line.rfind("right", 0) == 0) {
        need_built(lineno);
        read_pair(lineno, line.substr(5), s.m, s.n, a, b, val, s.m);
        s.right[a * n + b] = val;
      } else if (line.rfind("theta", 0) == 0) {
        need_built(lineno);
        read_pair(lineno, line.substr(5), s.m, s.m, a, b, val, n);
        if (a >= b) fail(lineno, "theta indices must satisfy x < y");
        s.theta[a * s.m + b] = val;
      } else if (line.rfind("vbracket", 0) == 0) {
        need_built(lineno);
        read_pair(lineno, line.substr(8), s.m, s.m, a, b, val, s.m);
        if (a >= b) fail(lineno, "vbracket indices must satisfy x < y");
        s.vbr[a * s.m + b] = val;
      } else {
        fail(lineno, "unrecognized line '" + line + "'");
      }
    }
  }
  if (!gdim) throw FormatError("missing 'gdim' header");
  if (!vdim) throw FormatError("missing 'vdim' header");
  if (!built) s = ExtendingSystem::zero(f, n, *vdim);
  return s;
}

std::string serialize_system(const ExtendingSystem& s) {
  std::ostringstream out;
  out << "gdim " << s.n << "\n";
  out << "vdim " << s.m << "\n";
  auto emit = [&](const std::string& kw, std::size_t a, std::size_t b, const Vec& v) {
    if (is_zero(v)) return;
    out << kw << " " << a + 1 << " " << b + 1 << " =";
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : " ") << v[k].to_string();
    out << "\n";
  };
  for (std::size_t x = 0; x < s.m; ++x)
    for (std::size_t g = 0; g < s.n; ++g) emit("left", x, g, s.left[x * s.n + g]);
  for (std::size_t x = 0; x < s.m; ++x)
    for (std::size_t g = 0; g < s.n; ++g) emit("right", x, g, s.right[x * s.n + g]);
  for (std::size_t x = 0; x < s.m; ++x)
    for (std::size_t y = x + 1; y < s.m; ++y) emit("theta", x, y, s.theta[x * s.m + y]);
  for (std::size_t x = 0; x < s.m; ++x)
    for (std::size_t y = x + 1; y < s.m; ++y) emit("vbracket", x, y, s.vbr[x * s.m + y]);
  return out.str();
}

namespace {

std::pair<std::string, std::size_t> split_spec(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos) return {spec, 0};
  std::string name = spec.substr(0, colon);
  std::string num = spec.substr(colon + 1);
  return {name, parse_size(0, num, "catalog parameter")};
}

Subspace first_coords(const Field& f, std::size_t dim, std::size_t k) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(unit_vec(f, dim, i));
  return Subspace::row_span(Matrix::from_rows(f, rows));
}

}  // namespace

LieAlgebra catalog_spec(const std::string& spec, const Field& f) {
  auto [name, n] = split_spec(spec);
  return catalog(name, n, f);
}

ExtensionSpec extension_catalog(const std::string& spec, const Field& f) {
  auto [name, n] = split_spec(spec);
  if (name == "heisenberg") {
    // h^{2n+1} = x1..xn, y1..yn, w with the new pair x_{n+1}, y_{n+1} appended
    if (n < 1) throw FormatError("heisenberg extension needs n >= 1");
    const std::size_t dim = 2 * n + 3;
    std::vector<BracketEntry> entries;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      Vec w = zero_vec(f, dim);
      w[2 * n] = Scalar::one(f);
      entries.push_back(BracketEntry{i, n + i, w});
    }
    Vec w = zero_vec(f, dim);
    w[2 * n] = Scalar::one(f);
    entries.push_back(BracketEntry{2 * n + 1, 2 * n + 2, w});
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    names.push_back("w");
    names.push_back("x" + std::to_string(n + 1));
    names.push_back("y" + std::to_string(n + 1));
    LieAlgebra h = require_lie_algebra(f, dim, entries, names);
    return {h, first_coords(f, dim, 2 * n + 1)};
  }
  if (name == "l") {
    // l(2n+1) = E1..En, F1..Fn, G with E_{n+1}, F_{n+1} appended
    if (n < 1) throw FormatError("l extension needs n >= 1");
    const std::size_t dim = 2 * n + 3;
    std::vector<BracketEntry> entries;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      Vec ei = zero_vec(f, dim);
      ei[i] = Scalar::one(f);
      entries.push_back(BracketEntry{i, 2 * n, ei});
      Vec fi = zero_vec(f, dim);
      fi[n + i] = -Scalar::one(f);
      entries.push_back(BracketEntry{n + i, 2 * n, fi});
    }
    Vec en = zero_vec(f, dim);
    en[2 * n + 1] = -Scalar::one(f);
    entries.push_back(BracketEntry{2 * n, 2 * n + 1, en});  // [G, E'] = -E'
    Vec fn = zero_vec(f, dim);
    fn[2 * n + 2] = Scalar::one(f);
    entries.push_back(BracketEntry{2 * n, 2 * n + 2, fn});  // [G, F'] = F'
    for (std::size_t i = 1; i <= n; ++i) names.push_back("E" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("F" + std::to_string(i));
    names.push_back("G");
    names.push_back("E" + std::to_string(n + 1));
    names.push_back("F" + std::to_string(n + 1));
    LieAlgebra h = require_lie_algebra(f, dim, entries, names);
    return {h, first_coords(f, dim, 2 * n + 1)};
  }
  if (name == "aff2") {
    LieAlgebra h = catalog("aff2", 0, f);
    return {h, first_coords(f, 2, 1)};
  }
  if (name == "sl2") {
    LieAlgebra h = catalog("sl", 2, f);
    std::vector<Vec> rows{unit_vec(f, 3, 2)};
    return {h, Subspace::row_span(Matrix::from_rows(f, rows))};
  }
  if (name == "t" || name == "t_alt" || name == "b") {
    if (n < 1) throw FormatError(name + " extension needs n >= 1");
    LieAlgebra h = catalog(name, n, f);
    return {h, first_coords(f, 2 * n + 2, 2 * n + 1)};
  }
  if (name == "fivedim_perfect") {
    LieAlgebra g = catalog("fivedim_perfect", 0, f);
    LieAlgebra h = single_extension(g, {zero_vec(f, 5), fivedim_delta(f)});
    return {h, first_coords(f, 6, 5)};
  }
  throw FormatError("unknown extension catalog entry '" + spec + "'");
}

}  // namespace galie
