#include "ering/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ering {

using json = nlohmann::json;

ModelError::ModelError(std::string source, std::size_t line, std::size_t column, std::string field,
                       const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                         (field.empty() ? "" : field + ": ") + message),
      source_(std::move(source)),
      line_(line),
      column_(column),
      field_(std::move(field)) {}

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(const std::string& text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Input iterator that reports how far the parser has read.
class CountingIterator {
public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator(const char* p, std::size_t* count) : p_(p), count_(count) {}
  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    ++*count_;
    return *this;
  }
  CountingIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p_ == b.p_; }

private:
  const char* p_;
  std::size_t* count_;
};

// SAX pass that records where each JSON pointer was read. Keys are located at
// the key itself, array elements at the start of the element.
class Locator : public nlohmann::json_sax<json> {
public:
  explicit Locator(const std::size_t* offset) : offset_(offset) {}

  std::map<std::string, std::size_t> where;

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override { return open(false); }
  bool start_array(std::size_t) override { return open(true); }
  bool end_object() override { return close(); }
  bool end_array() override { return close(); }
  bool key(string_t& k) override {
    frames_.back().last = frames_.back().prefix + "/" + k;
    where.emplace(frames_.back().last, *offset_);
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

private:
  struct Frame {
    std::string prefix;
    bool array = false;
    std::size_t index = 0;
    std::string last;
  };

  // Pointer of the value that is starting now.
  std::string here() {
    if (frames_.empty()) return "";
    Frame& f = frames_.back();
    if (!f.array) return f.last;
    std::string p = f.prefix + "/" + std::to_string(f.index++);
    where.emplace(p, *offset_);
    return p;
  }
  bool value() {
    here();
    return true;
  }
  bool open(bool array) {
    frames_.push_back({here(), array, 0, {}});
    return true;
  }
  bool close() {
    frames_.pop_back();
    return true;
  }

  const std::size_t* offset_;
  std::vector<Frame> frames_;
};

class Loader {
public:
  Loader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {
    try {
      root_ = json::parse(text);
    } catch (const json::parse_error& e) {
      const Position p = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
      std::string message = e.what();
      // drop the library's "[json.exception.parse_error.101] parse error at line x, column y: " prefix
      if (auto colon = message.find(": "); colon != std::string::npos) message = message.substr(colon + 2);
      throw ModelError(source_, p.line, p.column, "", message);
    }
    std::size_t offset = 0;
    Locator locator(&offset);
    CountingIterator first(text.data(), &offset), last(text.data() + text.size(), &offset);
    json::sax_parse(first, last, &locator);
    where_ = std::move(locator.where);
  }

  Model load() {
    if (!root_.is_object()) fail("", "a model must be a JSON object");
    Model m;
    m.carrier = carrier(root_, "", true);
    if (root_.contains("name")) m.name = string_field(root_, "", "name");
    if (root_.contains("mutation")) {
      const std::string name = string_field(root_, "", "mutation");
      const auto mutation = parse_mutation(name);
      if (!mutation) fail("/mutation", "unknown mutation \"" + name + "\"");
      m.mutation = *mutation;
      try {
        m.carrier = mutate(m.carrier, m.mutation);
      } catch (const std::invalid_argument& e) {
        fail("/mutation", e.what());
      }
    }
    return m;
  }

private:
  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    // locate the field, or its nearest located ancestor
    std::string p = field;
    std::size_t offset = 0;
    while (true) {
      if (auto it = where_.find(p); it != where_.end()) {
        offset = it->second;
        break;
      }
      const auto slash = p.rfind('/');
      if (slash == std::string::npos || p.empty()) break;
      p = p.substr(0, slash);
    }
    // the parser has consumed the located token; back up to its start
    while (offset > 0 && offset <= text_.size() && std::isspace(static_cast<unsigned char>(text_[offset - 1]))) --offset;
    if (offset > 0 && text_[offset - 1] == '"') {
      --offset;
      while (offset > 0 && text_[offset - 1] != '"') --offset;
      if (offset > 0) --offset;
    }
    const Position pos = position_of(text_, offset);
    throw ModelError(source_, pos.line, pos.column, field, message);
  }

  void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) const {
    for (const auto& [key, _] : j.items()) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
        fail(path + "/" + key, "unknown field");
    }
  }

  const json& field(const json& j, const std::string& path, const char* key) const {
    if (!j.contains(key)) fail(path, std::string("missing field \"") + key + "\"");
    return j.at(key);
  }

  std::string string_field(const json& j, const std::string& path, const char* key) const {
    const json& v = field(j, path, key);
    if (!v.is_string()) fail(path + "/" + key, "expected a string");
    return v.get<std::string>();
  }

  std::int64_t positive_int(const json& j, const std::string& path, const char* key) const {
    const json& v = field(j, path, key);
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) fail(path + "/" + key, "expected a positive integer");
    return v.get<std::int64_t>();
  }

  std::vector<std::string> string_list(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) fail(path + "/" + std::to_string(i), "expected a string");
      out.push_back(v[i].get<std::string>());
    }
    return out;
  }

  CarrierPtr carrier(const json& j, const std::string& path, bool top) const {
    if (!j.is_object()) fail(path, "expected a carrier object");
    const std::string kind = string_field(j, path, "kind");
    if (kind == "function_ring") {
      if (top) only_keys(j, path, {"kind", "name", "mutation", "points", "atoms", "values", "grid"});
      else only_keys(j, path, {"kind", "name", "points", "atoms", "values", "grid"});
      return function_ring(j, path);
    }
    if (kind == "matrix") {
      if (top) only_keys(j, path, {"kind", "name", "mutation", "dim"});
      else only_keys(j, path, {"kind", "name", "dim"});
      return make_matrix_carrier(static_cast<std::size_t>(positive_int(j, path, "dim")));
    }
    if (kind == "product") {
      if (top) only_keys(j, path, {"kind", "name", "mutation", "left", "right"});
      else only_keys(j, path, {"kind", "name", "left", "right"});
      return product_carrier(carrier(field(j, path, "left"), path + "/left", false),
                             carrier(field(j, path, "right"), path + "/right", false));
    }
    fail(path + "/kind", "unknown kind \"" + kind + "\" (expected function_ring, matrix or product)");
  }

  CarrierPtr function_ring(const json& j, const std::string& path) const {
    const std::string values = string_field(j, path, "values");
    ValueRing ring;
    if (values == "int" || values == "integers") ring = ValueRing::integers;
    else if (values == "rational" || values == "rationals") ring = ValueRing::rationals;
    else fail(path + "/values", "expected \"int\" or \"rational\"");

    std::optional<std::int64_t> grid;
    if (j.contains("grid")) {
      if (ring == ValueRing::integers) fail(path + "/grid", "a grid only applies to rational values");
      grid = positive_int(j, path, "grid");
    }

    const json& atoms = field(j, path, "atoms");
    std::vector<std::vector<std::string>> blocks;
    if (atoms.is_number_integer()) {
      const auto n = atoms.get<std::int64_t>();
      if (n <= 0) fail(path + "/atoms", "the atom count must be positive");
      if (j.contains("points")) fail(path + "/points", "points need explicit atoms");
      return make_function_carrier(MeasurableSpace::discrete(static_cast<std::size_t>(n)), ring, grid);
    }
    if (!atoms.is_array()) fail(path + "/atoms", "expected an atom count or an array of atoms");
    if (atoms.empty()) fail(path + "/atoms", "the atom set is empty");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      blocks.push_back(string_list(atoms[i], path + "/atoms/" + std::to_string(i)));
      if (blocks.back().empty()) fail(path + "/atoms/" + std::to_string(i), "an atom must contain a point");
    }

    std::vector<std::string> points;
    if (j.contains("points")) {
      points = string_list(j.at("points"), path + "/points");
    } else {
      for (const auto& b : blocks)
        for (const auto& p : b)
          if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    try {
      return make_function_carrier(MeasurableSpace(std::move(points), std::move(blocks)), ring, grid);
    } catch (const std::invalid_argument& e) {
      fail(path + "/atoms", e.what());
    }
  }

  const std::string& text_;
  std::string source_;
  json root_;
  std::map<std::string, std::size_t> where_;
};

}  // namespace

Model parse_model(const std::string& text, const std::string& source) { return Loader(text, source).load(); }

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError(path.string(), 0, 0, "", "cannot open model file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), path.string());
}

}  // namespace ering
