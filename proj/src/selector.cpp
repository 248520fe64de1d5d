#include "mgw/selector.hpp"

#include <charconv>

#include "mgw/families.hpp"

namespace mgw {

namespace {

long long parse_int(std::string_view s, std::string_view selector) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error("group selector \"" + std::string(selector) + "\": bad integer \"" + std::string(s) + "\"");
  }
  return v;
}

int parse_rank(std::string_view s, std::string_view selector) {
  const long long n = parse_int(s, selector);
  if (n < 1 || n > 1000) throw Error("group selector \"" + std::string(selector) + "\": rank out of range");
  return static_cast<int>(n);
}

std::vector<long long> parse_list(std::string_view s, std::string_view selector) {
  std::vector<long long> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma), selector));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

struct Split {
  std::string_view head;
  std::string_view rest;
};

Split split_head(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return {s, {}};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

// bowditch:<subset>:<m>; the subset may itself contain ':'.
std::pair<SubsetSpec, long long> bowditch_args(std::string_view rest, std::string_view selector) {
  const auto colon = rest.rfind(':');
  if (colon == std::string_view::npos) throw Error("group selector \"" + std::string(selector) + "\": expected bowditch:<subset>:<m>");
  return {parse_subset(rest.substr(0, colon)), parse_int(rest.substr(colon + 1), selector)};
}

}  // namespace

MarkedGroup parse_group(std::string_view selector) {
  const auto [head, rest] = split_head(selector);
  if (head == "free") return MarkedGroup(free_oracle(parse_rank(rest, selector)));
  if (head == "abelian") return MarkedGroup(abelian_oracle(parse_rank(rest, selector)));
  if (head == "trivial") return MarkedGroup(trivial_oracle(parse_rank(rest, selector)));
  if (head == "z2free") return MarkedGroup(involution_free_oracle(parse_rank(rest, selector)));
  if (head == "z2abelian") return MarkedGroup(elementary_abelian2_oracle(parse_rank(rest, selector)));
  if (head == "zlinear") return MarkedGroup(integer_oracle(parse_list(rest, selector)));
  if (head == "zmod") {
    const auto [mod, weights] = split_head(rest);
    return MarkedGroup(cyclic_oracle(parse_int(mod, selector), parse_list(weights, selector)));
  }
  if (head == "lamplighter" && rest.empty()) return MarkedGroup(lamplighter_oracle());
  if (head == "hall") return MarkedGroup(hall_oracle(parse_subset(rest)));
  if (head == "pqi") return MarkedGroup(pqi_oracle(parse_subset(rest)));
  if (head == "bowditch") {
    const auto [subset, m] = bowditch_args(rest, selector);
    return MarkedGroup(bowditch_oracle(subset, m));
  }
  throw Error("unknown group selector \"" + std::string(selector) + "\"");
}

std::optional<Presentation> selector_presentation(std::string_view selector) {
  const auto [head, rest] = split_head(selector);
  if (head != "bowditch") return std::nullopt;
  const auto [subset, m] = bowditch_args(rest, selector);
  return bowditch_relators(subset, m);
}

}  // namespace mgw
