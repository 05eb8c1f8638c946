#include "ramcover/report_json.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "ramcover/errors.hpp"

namespace ramcover {

namespace {

std::string describe(const std::string& source, int line, int column, const std::string& token,
                     const std::string& reason) {
  std::string s = source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + reason;
  if (!token.empty()) s += " (at '" + token + "')";
  return s;
}

// Offsets of the tokens that produce SAX events, in order: brackets, braces,
// strings (keys included), numbers and literals. Commas and colons produce none.
std::vector<std::size_t> event_offsets(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ':') {
      ++i;
    } else if (c == '"') {
      out.push_back(i);
      for (++i; i < text.size() && text[i] != '"'; ++i)
        if (text[i] == '\\') ++i;
      ++i;
    } else if (c == '{' || c == '}' || c == '[' || c == ']') {
      out.push_back(i++);
    } else {
      out.push_back(i);
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',' &&
             text[i] != ']' && text[i] != '}' && text[i] != ':')
        ++i;
    }
  }
  return out;
}

// Records, for each JSON pointer, the ordinal of the event that started its value.
class PointerIndex : public nlohmann::json_sax<Json> {
 public:
  std::map<std::string, std::size_t> where;

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override {
    value();
    stack_.push_back(Frame{false, 0, 0, {}});
    return true;
  }
  bool key(string_t& k) override {
    ++event_;
    stack_.back().key = k;
    return true;
  }
  bool end_object() override {
    ++event_;
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    value();
    stack_.push_back(Frame{true, 0, 0, {}});
    return true;
  }
  bool end_array() override {
    ++event_;
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    bool array;
    std::size_t next = 0;     // arrays: index of the next element
    std::size_t current = 0;  // arrays: index of the element being read
    std::string key;          // objects: the current key
  };
  bool value() {
    if (!stack_.empty() && stack_.back().array) stack_.back().current = stack_.back().next++;
    std::string path;
    for (const auto& f : stack_) path += "/" + (f.array ? std::to_string(f.current) : f.key);
    where[path] = event_++;
    return true;
  }
  std::vector<Frame> stack_;
  std::size_t event_ = 0;
};

// Parsed document plus enough bookkeeping to turn a JSON pointer back into a
// line, column and token of the original text.
class Located {
 public:
  Located(const std::string& text, const std::string& source) : text_(text), source_(source) {
    try {
      doc_ = Json::parse(text);
    } catch (const Json::parse_error& e) {
      std::size_t at = e.byte ? e.byte - 1 : 0;
      std::string reason = e.what();
      if (auto p = reason.find("] "); p != std::string::npos) reason = reason.substr(p + 2);
      fail_at(std::min(at, text.empty() ? 0 : text.size() - 1), reason);
    }
    PointerIndex idx;
    Json::sax_parse(text, &idx);
    index_ = std::move(idx.where);
    offsets_ = event_offsets(text);
  }

  const Json& doc() const { return doc_; }

  std::size_t offset_of(const std::string& pointer) const {
    auto it = index_.find(pointer);
    if (it == index_.end() || it->second >= offsets_.size()) return 0;
    return offsets_[it->second];
  }

  // `token` overrides the fragment read off the text, e.g. for errors located
  // inside a JSON string.
  [[noreturn]] void fail(const std::string& pointer, const std::string& reason, std::size_t extra = 0,
                         const std::string& token = "") const {
    fail_at(offset_of(pointer) + extra, reason, token);
  }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& reason, std::string token = "") const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::size_t end = offset;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) && text_[end] != ',' &&
           text_[end] != ']' && text_[end] != '}' && end - offset < 40)
      ++end;
    if (token.empty())
      token = offset < text_.size() ? text_.substr(offset, std::max<std::size_t>(end - offset, 1)) : "<end>";
    throw InputError(source_, line, column, token, reason);
  }

 private:
  const std::string& text_;
  std::string source_;
  Json doc_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::size_t> offsets_;
};

Count read_count(const Located& in, const Json& v, const std::string& pointer, Count lo) {
  if (!v.is_number_integer()) in.fail(pointer, "expected an integer");
  Count c = v.get<Count>();
  if (c < lo) in.fail(pointer, "expected an integer >= " + std::to_string(lo));
  return c;
}

const Json& member(const Located& in, const std::string& key) {
  const Json& doc = in.doc();
  if (!doc.is_object()) in.fail("", "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) in.fail("", "missing key \"" + key + "\"");
  return *it;
}

}  // namespace

InputError::InputError(const std::string& source, int line, int column, const std::string& token,
                       const std::string& reason)
    : std::invalid_argument(describe(source, line, column, token, reason)), line(line), column(column), token(token) {}

RamificationData ramdata_from_json(const std::string& text, const std::string& source) {
  Located in(text, source);
  const Count degree = read_count(in, member(in, "degree"), "/degree", 1);
  const Json& branches = member(in, "branches");
  if (!branches.is_array()) in.fail("/branches", "expected an array of branches");
  std::vector<Partition> parts;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const std::string ptr = "/branches/" + std::to_string(i);
    const Json& b = branches[i];
    if (b.is_string()) {
      try {
        parts.push_back(expand_star(b.get<std::string>(), degree));
      } catch (const ParseError& e) {
        in.fail(ptr, e.what(), 1 + e.position, e.token);
      } catch (const DomainError& e) {
        in.fail(ptr, e.what());
      }
    } else if (b.is_array()) {
      std::vector<Count> v;
      Count sum = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        Count c = read_count(in, b[j], ptr + "/" + std::to_string(j), 1);
        if (c > degree) in.fail(ptr + "/" + std::to_string(j), "part exceeds the degree " + std::to_string(degree));
        sum += c;
        v.push_back(c);
      }
      if (sum != degree)
        in.fail(ptr, "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(degree));
      parts.emplace_back(v);
    } else {
      in.fail(ptr, "a branch is an array of parts or a compact string");
    }
  }
  return RamificationData(degree, std::move(parts));
}

TupleInput tuple_from_json(const std::string& text, const std::string& source) {
  Located in(text, source);
  TupleInput out;
  Count degree = read_count(in, member(in, "degree"), "/degree", 1);
  if (degree > 100000) in.fail("/degree", "degree too large");
  out.degree = static_cast<int>(degree);
  const Json& cycles = member(in, "cycles");
  if (!cycles.is_array() || cycles.empty()) in.fail("/cycles", "expected a non-empty array of permutations");
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const std::string ptr = "/cycles/" + std::to_string(i);
    if (!cycles[i].is_string()) in.fail(ptr, "expected a permutation in cycle notation");
    try {
      out.cycles.push_back(Permutation::parse(cycles[i].get<std::string>(), out.degree));
    } catch (const ParseError& e) {
      in.fail(ptr, e.what(), 1 + e.position, e.token);
    }
  }
  return out;
}

Json to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json to_json(const Rational& r) {
  if (is_integer(r)) return to_json(BigInt(boost::multiprecision::numerator(r)));
  return to_string(r);
}

Json to_json(const Partition& e) { return e.parts(); }

Json to_json(const RamificationData& d) {
  Json b = Json::array();
  for (const auto& p : d.branches()) b.push_back(to_json(p));
  return {{"degree", d.degree()}, {"branches", b}};
}

Json to_json(const TableEntry& e) {
  Json j = to_json(e.data);
  j["label"] = e.label;
  j["params"] = e.params;
  Json compact = Json::array();
  for (const auto& p : e.data.branches()) compact.push_back(p.to_compact());
  j["compact"] = compact;
  Json claims = Json::array();
  for (Claim c : e.claims) claims.push_back(to_string(c));
  j["claims"] = claims;
  j["sources"] = e.sources;
  GenusResult g = rh_genus(e.data, 0);
  j["rh_genus"] = to_json(g.value);
  if (e.galois_closure_genus) j["galois_closure_genus"] = *e.galois_closure_genus;
  if (!e.group.empty()) j["group"] = e.group;
  return j;
}

Json to_json(const GroupVerdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["method"] = v.method ? Json(to_string(*v.method)) : Json(nullptr);
  j["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
  j["witness_word"] = v.witness_word;
  j["order"] = v.order ? Json(v.order->str()) : Json(nullptr);
  return j;
}

Json to_json(const CertReport& r) {
  Json checks = Json::object();
  for (const auto& [c, res] : r.checks) checks[to_string(c)] = {{"passed", res.passed}, {"detail", res.detail}};
  Json j = {{"label", r.label},   {"ell", r.l},
            {"checks", checks},   {"normalization", r.normalization},
            {"cycles", r.cycles}, {"all_passed", r.all_passed()}};
  if (r.verdict) j["verdict"] = to_json(*r.verdict);
  return j;
}

Json to_json(const RefuteReport& r) {
  Json j = {{"order", r.order},
            {"tuples_examined", r.tuples_examined},
            {"product_one", r.product_one},
            {"transitive", r.transitive},
            {"with_alt", r.with_alt},
            {"realized_with_alt", r.realized_with_alt},
            {"transitive_orders", r.transitive_orders}};
  if (r.alt_example) {
    Json ex = Json::array();
    for (const auto& p : *r.alt_example) ex.push_back(p.to_string());
    j["alt_example"] = ex;
  } else {
    j["alt_example"] = nullptr;
  }
  return j;
}

Json to_json(const QuotientGenusReport& r) {
  Json per = Json::array();
  for (const auto& b : r.per_branch) per.push_back({{"r_f", b.r_f}, {"r_h", b.r_h}, {"r_pi", b.r_pi}});
  return {{"t", r.t}, {"g_Xt", r.g_Xt}, {"g_Yt", r.g_Yt}, {"per_branch", per}};
}

Json to_json(const CoverClass& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back({{"class", p.to_string()}, {"epsilon", p.epsilon}});
  return {{"M", c.M}, {"case", c.case_label}, {"points", pts}};
}

Json to_json(const FilterTrigger& t, const RamificationData& d) {
  auto name = [&](int i) -> Json {
    if (i < 0) return "unramified";
    return d.branches()[static_cast<std::size_t>(i)].to_compact();
  };
  return {{"condition", t.condition}, {"p", t.p}, {"points", {name(t.p1), name(t.p2), name(t.p3)}}};
}

std::string table_csv(const std::vector<TableEntry>& entries) {
  std::ostringstream os;
  os << "label,degree,partition\n";
  for (const auto& e : entries) {
    std::string label = e.label;
    if (auto a = e.params.find("a"); a != e.params.end()) label += "[a=" + std::to_string(a->second) + "]";
    for (const auto& p : e.data.branches()) os << label << ',' << e.data.degree() << ",\"" << p.to_compact() << "\"\n";
  }
  return os.str();
}

}  // namespace ramcover
