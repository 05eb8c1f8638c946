#include "ramcover/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ramcover {

namespace {

std::int64_t parse_positive(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cap '" + key + "': not an integer: '" + value + "'");
  }
  if (used != value.size() || v <= 0)
    throw std::invalid_argument("cap '" + key + "' must be a positive integer, got '" + value + "'");
  return v;
}

}  // namespace

Caps Caps::parse(const std::string& text, Caps base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("cap entry without '=': '" + item + "'");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(item.substr(0, eq));
    std::string value = trim(item.substr(eq + 1));
    std::int64_t v = parse_positive(key, value);
    if (key == "chain_degree")
      base.chain_degree = static_cast<int>(v);
    else if (key == "induced_domain")
      base.induced_domain = v;
    else if (key == "search_degree")
      base.search_degree = static_cast<int>(v);
    else if (key == "search_work")
      base.search_work = v;
    else if (key == "jordan_depth")
      base.jordan_depth = static_cast<int>(v);
    else
      throw std::invalid_argument("unknown cap '" + key + "'");
  }
  return base;
}

Caps Caps::parse(const std::string& text) { return parse(text, Caps{}); }

std::string Caps::to_string() const {
  std::ostringstream os;
  os << "chain_degree=" << chain_degree << ",induced_domain=" << induced_domain
     << ",jordan_depth=" << jordan_depth << ",search_degree=" << search_degree
     << ",search_work=" << search_work;
  return os.str();
}

const Caps& default_caps() {
  static const Caps caps = [] {
    const char* env = std::getenv("RAMCOVER_CAPS");
    return env ? Caps::parse(env) : Caps{};
  }();
  return caps;
}

}  // namespace ramcover
