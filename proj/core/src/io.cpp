#include "cfhom/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cfhom/error.hpp"

namespace cfhom::io {

using nlohmann::json;

namespace {

// Field path plus source name for error messages.
class Cursor {
 public:
  Cursor(const json& value, std::string source, std::string path)
      : value_(value), source_(std::move(source)), path_(std::move(path)) {}

  const json& value() const { return value_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(source_ + ": " + (path_.empty() ? std::string() : path_ + ": ") + what);
  }

  Cursor field(const std::string& key) const {
    if (!value_.is_object()) fail("expected object");
    auto it = value_.find(key);
    if (it == value_.end()) Cursor(value_, source_, join(key)).fail("missing field");
    return Cursor(*it, source_, join(key));
  }
  bool has(const std::string& key) const { return value_.is_object() && value_.contains(key); }

  Cursor index(std::size_t i) const { return Cursor(value_.at(i), source_, path_ + "[" + std::to_string(i) + "]"); }

  std::size_t array_size() const {
    if (!value_.is_array()) fail("expected array");
    return value_.size();
  }

  template <class Fn>
  void for_each_member(Fn fn) const {
    if (!value_.is_object()) fail("expected object");
    for (auto it = value_.begin(); it != value_.end(); ++it) fn(it.key(), Cursor(it.value(), source_, join(it.key())));
  }

  long long as_int(long long lo = std::numeric_limits<long long>::min(),
                   long long hi = std::numeric_limits<long long>::max()) const {
    if (!value_.is_number_integer()) fail("expected integer");
    long long v = 0;
    if (value_.is_number_unsigned()) {
      auto u = value_.get<unsigned long long>();
      if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) fail("integer out of range");
      v = static_cast<long long>(u);
    } else {
      v = value_.get<long long>();
    }
    if (v < lo || v > hi)
      fail("value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  }

  Integer as_integer() const {
    if (value_.is_string()) {
      try {
        return parse_integer(value_.get<std::string>());
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    if (value_.is_number_integer()) return Integer(std::to_string(as_int()));
    fail("expected integer or decimal string");
  }

  bool as_bool() const {
    if (!value_.is_boolean()) fail("expected true or false");
    return value_.get<bool>();
  }

  long long key_as_int(const std::string& key) const {
    try {
      std::size_t used = 0;
      long long v = std::stoll(key, &used);
      if (used == key.size()) return v;
    } catch (const std::exception&) {
    }
    Cursor(value_, source_, join(key)).fail("key is not an integer");
  }

 private:
  std::string join(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json& value_;
  std::string source_;
  std::string path_;
};

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(source + ": parse error: " + e.what());
  }
}

void check_version(const Cursor& root) {
  const auto v = root.field("version").as_int();
  if (v != format_version)
    root.field("version").fail("unsupported format version " + std::to_string(v));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json integer_json(const Integer& x) { return cfhom::to_string(x); }

// Small structural numbers go out as JSON numbers, anything larger as a string.
json count_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return cfhom::to_string(x);
}

IntMatrix parse_matrix(const Cursor& c, std::size_t rows, std::size_t cols) {
  const std::size_t n = c.array_size();
  if (n != rows && !(rows == 0 && n == 0))
    c.fail("shape error: expected " + std::to_string(rows) + " rows, got " + std::to_string(n));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Cursor row = c.index(i);
    if (row.array_size() != cols)
      row.fail("shape error: expected " + std::to_string(cols) + " entries, got " + std::to_string(row.array_size()));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = row.index(j).as_integer();
  }
  return m;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ChainComplex complex_from(const Cursor& root, bool versioned) {
  if (versioned) check_version(root);
  const int base = static_cast<int>(root.field("baseDegree").as_int(-1000000, 1000000));
  const Cursor ranks_c = root.field("ranks");
  std::vector<std::size_t> ranks(ranks_c.array_size());
  for (std::size_t i = 0; i < ranks.size(); ++i)
    ranks[i] = static_cast<std::size_t>(ranks_c.index(i).as_int(0, 1 << 20));
  const Cursor bd = root.field("boundaries");
  const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
  if (bd.array_size() != expected)
    bd.fail("shape error: expected " + std::to_string(expected) + " boundary matrices, got " +
            std::to_string(bd.array_size()));
  std::vector<IntMatrix> boundaries;
  for (std::size_t i = 0; i < expected; ++i) boundaries.push_back(parse_matrix(bd.index(i), ranks[i], ranks[i + 1]));
  Integer modulus = root.has("modulus") ? root.field("modulus").as_integer() : Integer(0);
  try {
    return ChainComplex(base, std::move(ranks), std::move(boundaries), std::move(modulus));
  } catch (const Error& e) {
    root.fail(e.what());
  }
}

json complex_json(const ChainComplex& c, bool versioned) {
  json j;
  if (versioned) j["version"] = format_version;
  j["baseDegree"] = c.base_degree();
  j["ranks"] = c.ranks();
  json bd = json::array();
  for (const auto& m : c.boundaries()) bd.push_back(matrix_json(m));
  j["boundaries"] = std::move(bd);
  j["modulus"] = count_json(c.modulus());
  return j;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ChainComplex parse_complex(std::string_view text, const std::string& source) {
  const json j = parse_json(text, source);
  return complex_from(Cursor(j, source, ""), true);
}

ChainComplex read_complex(const std::filesystem::path& path) {
  return parse_complex(read_text_file(path), path.filename().string());
}

std::string serialize_complex(const ChainComplex& c) { return dump(complex_json(c, true)); }

HomologyFamily parse_family(std::string_view text, const std::string& source) {
  const json j = parse_json(text, source);
  const Cursor root(j, source, "");
  check_version(root);
  HomologyFamily f;
  const Cursor man = root.field("manifold");
  f.manifold.dim = static_cast<int>(man.field("dim").as_int(1, 1 << 20));
  f.manifold.orientable = man.field("orientable").as_bool();
  f.manifold.surface = man.has("surface") && man.field("surface").as_bool();
  f.manifold.open = man.has("open") && man.field("open").as_bool();
  f.manifold.finite_type = !man.has("finiteType") || man.field("finiteType").as_bool();
  if (man.has("euler")) f.manifold.euler = static_cast<long>(man.field("euler").as_int(-(1LL << 40), 1LL << 40));
  try {
    f.manifold.validate();
  } catch (const Error& e) {
    man.fail(e.what());
  }
  root.field("degrees").for_each_member([&](const std::string& dkey, const Cursor& dc) {
    const int degree = static_cast<int>(root.field("degrees").key_as_int(dkey));
    if (degree < 0) dc.fail("degree must be >= 0");
    dc.for_each_member([&](const std::string& kkey, const Cursor& gc) {
      const long k = static_cast<long>(dc.key_as_int(kkey));
      if (k < 0) gc.fail("particle count must be >= 0");
      const auto rank = static_cast<std::size_t>(gc.field("rank").as_int(0, 1 << 20));
      std::vector<Integer> torsion;
      if (gc.has("torsion")) {
        const Cursor tc = gc.field("torsion");
        for (std::size_t i = 0; i < tc.array_size(); ++i) {
          Integer t = tc.index(i).as_integer();
          if (t < 1) tc.index(i).fail("torsion order must be >= 1");
          torsion.push_back(std::move(t));
        }
      }
      f.set(degree, k, FGAbelianGroup::from_cyclic_orders(rank, std::move(torsion)));
    });
  });
  return f;
}

HomologyFamily read_family(const std::filesystem::path& path) {
  return parse_family(read_text_file(path), path.filename().string());
}

std::string serialize_family(const HomologyFamily& f) {
  json j;
  j["version"] = format_version;
  json man;
  man["dim"] = f.manifold.dim;
  man["orientable"] = f.manifold.orientable;
  man["surface"] = f.manifold.surface;
  if (f.manifold.open) man["open"] = true;
  if (f.manifold.euler) man["euler"] = *f.manifold.euler;
  man["finiteType"] = f.manifold.finite_type;
  j["manifold"] = std::move(man);
  json degrees = json::object();
  for (const auto& [degree, by_k] : f.degrees) {
    json dj = json::object();
    for (const auto& [k, g] : by_k) {
      json torsion = json::array();
      for (const auto& t : g.invariant_factors()) torsion.push_back(integer_json(t));
      dj[std::to_string(k)] = json{{"rank", g.free_rank()}, {"torsion", std::move(torsion)}};
    }
    degrees[std::to_string(degree)] = std::move(dj);
  }
  j["degrees"] = std::move(degrees);
  return dump(j);
}

CardinalityTable parse_cardinalities(std::string_view text, const std::string& source) {
  const json j = parse_json(text, source);
  const Cursor root(j, source, "");
  check_version(root);
  CardinalityTable t;
  t.p = root.field("p").as_integer();
  if (!is_prime(t.p)) root.field("p").fail("p = " + to_string(t.p) + " is not prime");
  t.max_level = static_cast<unsigned>(root.field("maxLevel").as_int(1, 4096));
  const Cursor values = root.field("values");
  values.for_each_member([&](const std::string& dkey, const Cursor& dc) {
    const int degree = static_cast<int>(values.key_as_int(dkey));
    dc.for_each_member([&](const std::string& wkey, const Cursor& vc) {
      const long long w = dc.key_as_int(wkey);
      if (w < 1 || w > t.max_level) vc.fail("level outside 1.." + std::to_string(t.max_level));
      Integer v = vc.as_integer();
      if (v < 1) vc.fail("cardinality must be >= 1");
      Integer rest = v;
      mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), t.p.get_mpz_t());
      if (rest != 1) vc.fail("cardinality " + to_string(v) + " is not a power of " + to_string(t.p));
      t.values[degree][static_cast<unsigned>(w)] = std::move(v);
    });
  });
  return t;
}

CardinalityTable read_cardinalities(const std::filesystem::path& path) {
  return parse_cardinalities(read_text_file(path), path.filename().string());
}

std::string serialize_cardinalities(const CardinalityTable& t) {
  json j;
  j["version"] = format_version;
  j["p"] = count_json(t.p);
  j["maxLevel"] = t.max_level;
  json values = json::object();
  for (const auto& [degree, by_w] : t.values) {
    json dj = json::object();
    for (const auto& [w, v] : by_w) dj[std::to_string(w)] = integer_json(v);
    values[std::to_string(degree)] = std::move(dj);
  }
  j["values"] = std::move(values);
  return dump(j);
}

ChainMap parse_chain_map(std::string_view text, const std::string& source) {
  const json j = parse_json(text, source);
  const Cursor root(j, source, "");
  check_version(root);
  ChainComplex src = complex_from(root.field("source"), false);
  ChainComplex tgt = complex_from(root.field("target"), false);
  const Cursor comps = root.field("components");
  if (comps.array_size() != src.length())
    comps.fail("shape error: expected " + std::to_string(src.length()) + " components, got " +
               std::to_string(comps.array_size()));
  std::vector<IntMatrix> components;
  for (std::size_t i = 0; i < src.length(); ++i) {
    const int d = src.base_degree() + static_cast<int>(i);
    components.push_back(parse_matrix(comps.index(i), tgt.rank(d), src.rank(d)));
  }
  try {
    return ChainMap(std::move(src), std::move(tgt), std::move(components));
  } catch (const Error& e) {
    root.fail(e.what());
  }
}

ChainMap read_chain_map(const std::filesystem::path& path) {
  return parse_chain_map(read_text_file(path), path.filename().string());
}

std::string serialize_chain_map(const ChainMap& f) {
  json j;
  j["version"] = format_version;
  j["source"] = complex_json(f.source(), false);
  j["target"] = complex_json(f.target(), false);
  json comps = json::array();
  for (const auto& m : f.components()) comps.push_back(matrix_json(m));
  j["components"] = std::move(comps);
  return dump(j);
}

}  // namespace cfhom::io
