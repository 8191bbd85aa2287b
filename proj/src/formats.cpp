#include "qdual/formats.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace qdual {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, what, line == 0 ? 1 : line);
}

std::vector<long long> integers(std::string_view s, std::size_t line) {
  std::vector<long long> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) parse_error(line, "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

long long single_integer(std::string_view s, std::size_t line) {
  const auto v = integers(s, line);
  if (v.size() != 1) parse_error(line, "expected one integer");
  return v.front();
}

/// Splits "lhs = rhs"; rhs may be empty.
std::pair<std::string, std::string> key_value(const Line& l) {
  const auto eq = l.text.find('=');
  if (eq == std::string::npos) parse_error(l.number, "expected 'key = value'");
  return {trim(std::string_view(l.text).substr(0, eq)), trim(std::string_view(l.text).substr(eq + 1))};
}

void expect_header(const std::vector<Line>& lines, std::string_view header) {
  if (lines.empty()) parse_error(1, "empty input");
  if (lines.front().text != header) parse_error(lines.front().number, "expected " + std::string(header));
}

Vec to_vec(const std::vector<long long>& xs) {
  Vec v(static_cast<Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Index>(i)) = xs[i];
  return v;
}

Vec reduce_vec(const Vec& v, long long p) {
  Vec out = v;
  for (Index i = 0; i < out.size(); ++i) out(i) = ((out(i) % p) + p) % p;
  return out;
}

}  // namespace

RingPtr parse_ring(std::string_view text) {
  const auto lines = significant_lines(text);
  expect_header(lines, "[ring]");
  std::optional<std::string> name;
  std::optional<long long> p, dim;
  std::optional<Vec> unit;
  std::map<std::pair<long long, long long>, std::pair<Vec, std::size_t>> products;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    auto [key, value] = key_value(l);
    if (key == "name") {
      if (value.empty() || value.find_first_of(" \t") != std::string::npos) parse_error(l.number, "bad name");
      name = value;
    } else if (key == "p") {
      p = single_integer(value, l.number);
    } else if (key == "dim") {
      dim = single_integer(value, l.number);
    } else if (key == "unit") {
      unit = to_vec(integers(value, l.number));
    } else if (key.rfind("mul", 0) == 0) {
      const auto idx = integers(std::string_view(key).substr(3), l.number);
      if (idx.size() != 2) parse_error(l.number, "expected 'mul <i> <j>'");
      if (products.count({idx[0], idx[1]})) parse_error(l.number, "duplicate product entry");
      products[{idx[0], idx[1]}] = {to_vec(integers(value, l.number)), l.number};
    } else {
      parse_error(l.number, "unknown key '" + key + "'");
    }
  }
  const std::size_t last = lines.back().number;
  if (!name) parse_error(last, "missing name");
  if (!p) parse_error(last, "missing p");
  if (!dim) parse_error(last, "missing dim");
  if (!unit) parse_error(last, "missing unit");
  if (*p < 2 || *p >= PrimeField::kModulusLimit || !is_prime(static_cast<std::uint64_t>(*p)))
    throw Error(ErrorKind::NotPrime, "p = " + std::to_string(*p));
  const Index d = *dim;
  if (d < 1) parse_error(last, "dim must be positive");
  if (unit->size() != d) parse_error(last, "unit must have dim entries");

  StructureConstants table;
  table.p = static_cast<std::uint32_t>(*p);
  table.dim = d;
  table.unit = reduce_vec(*unit, *p);
  table.products.assign(static_cast<std::size_t>(d * d), Vec());
  for (const auto& [ij, entry] : products) {
    const auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= d || j >= d) parse_error(entry.second, "product index out of range");
    if (entry.first.size() != d) parse_error(entry.second, "product must have dim entries");
  }
  for (Index i = 0; i < d; ++i)
    for (Index j = i; j < d; ++j) {
      auto it = products.find({i, j});
      if (it == products.end())
        parse_error(last, "missing 'mul " + std::to_string(i) + " " + std::to_string(j) + "'");
      const Vec v = reduce_vec(it->second.first, *p);
      table.products[static_cast<std::size_t>(i * d + j)] = v;
      auto mirror = products.find({j, i});
      table.products[static_cast<std::size_t>(j * d + i)] =
          (i != j && mirror != products.end()) ? reduce_vec(mirror->second.first, *p) : v;
    }
  return Ring::validate(*name, table);
}

NamedModule parse_module(std::string_view text, const RingTable& rings) {
  const auto lines = significant_lines(text);
  expect_header(lines, "[module]");
  std::optional<std::string> name, ring_name;
  std::optional<long long> dim;
  std::map<long long, std::pair<std::string, std::size_t>> acts;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    auto [key, value] = key_value(l);
    if (key == "name") {
      name = value;
    } else if (key == "ring") {
      ring_name = value;
    } else if (key == "dim") {
      dim = single_integer(value, l.number);
    } else if (key.rfind("act", 0) == 0) {
      const long long i = single_integer(std::string_view(key).substr(3), l.number);
      if (acts.count(i)) parse_error(l.number, "duplicate action entry");
      acts[i] = {value, l.number};
    } else {
      parse_error(l.number, "unknown key '" + key + "'");
    }
  }
  const std::size_t last = lines.back().number;
  if (!name) parse_error(last, "missing name");
  if (!ring_name) parse_error(last, "missing ring");
  if (!dim || *dim < 0) parse_error(last, "missing or negative dim");
  auto it = rings.find(*ring_name);
  if (it == rings.end()) throw Error(ErrorKind::UnknownRing, *ring_name);
  const RingPtr& ring = it->second;
  const Index n = *dim;
  std::vector<Mat> action;
  for (Index i = 0; i < ring->dim(); ++i) {
    auto a = acts.find(i);
    if (a == acts.end()) parse_error(last, "missing 'act " + std::to_string(i) + "'");
    const auto& [body, line] = a->second;
    Mat m(n, n);
    std::vector<std::string> rows;
    if (!trim(body).empty()) {
      std::size_t pos = 0;
      while (true) {
        const auto slash = body.find('/', pos);
        rows.push_back(body.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos));
        if (slash == std::string::npos) break;
        pos = slash + 1;
      }
    }
    if (static_cast<Index>(rows.size()) != n) parse_error(line, "expected " + std::to_string(n) + " rows");
    for (Index r = 0; r < n; ++r) {
      const auto vals = integers(rows[static_cast<std::size_t>(r)], line);
      if (static_cast<Index>(vals.size()) != n) parse_error(line, "row " + std::to_string(r) + " has wrong length");
      for (Index c = 0; c < n; ++c) m(r, c) = vals[static_cast<std::size_t>(c)];
    }
    action.push_back(ring->field().reduced(m));
  }
  for (const auto& [i, entry] : acts)
    if (i < 0 || i >= ring->dim()) parse_error(entry.second, "action index out of range");
  return {*name, Module(ring, std::move(action))};
}

std::string serialize_ring(const Ring& ring) {
  std::ostringstream os;
  auto row = [&os](const Vec& v) {
    for (Index i = 0; i < v.size(); ++i) os << (i ? " " : "") << v(i);
  };
  os << "[ring]\nname = " << ring.name() << "\np = " << ring.field().modulus() << "\ndim = " << ring.dim()
     << "\nunit = ";
  row(ring.unit());
  os << "\n";
  for (Index i = 0; i < ring.dim(); ++i)
    for (Index j = i; j < ring.dim(); ++j) {
      os << "mul " << i << " " << j << " = ";
      row(ring.table().product(i, j));
      os << "\n";
    }
  return os.str();
}

std::string serialize_module(const Module& m, std::string_view name) {
  std::ostringstream os;
  os << "[module]\nname = " << name << "\nring = " << m.ring()->name() << "\ndim = " << m.dim() << "\n";
  for (Index i = 0; i < m.ring()->dim(); ++i) {
    os << "act " << i << " =";
    const Mat& a = m.action(i);
    for (Index r = 0; r < a.rows(); ++r) {
      if (r > 0) os << " /";
      for (Index c = 0; c < a.cols(); ++c) os << " " << a(r, c);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qdual
