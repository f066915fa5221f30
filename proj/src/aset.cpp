#include "cyclekit/aset.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cyclekit {

namespace {

bool base_member(const AsetSpec& spec, int r) {
  switch (spec.kind) {
    case AsetKind::even:
      return r % 2 == 0;
    case AsetKind::odd:
      return r % 2 == 1;
    case AsetKind::divisible:
      return r % spec.param == 0;
    case AsetKind::min_length:
      return r >= spec.param;
    case AsetKind::explicit_list:
      return std::find(spec.values.begin(), spec.values.end(), r) !=
             spec.values.end();
  }
  throw std::logic_error("base_member: bad kind");
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("aset: bad integer in ") + what);
  return v;
}

}  // namespace

CycleLengthSet::CycleLengthSet(const AsetSpec& spec, int n_max) {
  if (n_max < 1) throw std::invalid_argument("aset: n_max must be >= 1");
  switch (spec.kind) {
    case AsetKind::divisible:
      if (spec.param < 1)
        throw std::invalid_argument("aset: divisor must be >= 1");
      break;
    case AsetKind::min_length:
      if (spec.param < 1)
        throw std::invalid_argument("aset: minimum length must be >= 1");
      break;
    case AsetKind::explicit_list:
      for (int v : spec.values)
        if (v < 1 || v > n_max)
          throw std::invalid_argument(
              "aset: explicit entry outside [1..n_max]");
      break;
    default:
      break;
  }
  n_max_ = n_max;
  spec_ = spec;
  member_.resize(static_cast<size_t>(n_max));
  for (int r = 1; r <= n_max; ++r)
    member_[static_cast<size_t>(r - 1)] =
        base_member(spec, r) != spec.complemented;
}

std::string CycleLengthSet::describe() const { return format_aset_spec(spec_); }

CycleLengthSet make_aset(const AsetSpec& spec, int n_max) {
  return CycleLengthSet(spec, n_max);
}

CycleLengthSet complement_aset(const CycleLengthSet& a) {
  CycleLengthSet c;
  c.n_max_ = a.n_max();
  c.spec_ = a.spec();
  c.spec_.complemented = !c.spec_.complemented;
  c.member_.resize(static_cast<size_t>(c.n_max_));
  for (int r = 1; r <= c.n_max_; ++r)
    c.member_[static_cast<size_t>(r - 1)] = !a.contains(r);
  return c;
}

AsetSpec parse_aset_spec(std::string_view text) {
  AsetSpec spec;
  if (!text.empty() && text.front() == '~') {
    spec.complemented = true;
    text.remove_prefix(1);
  }
  if (text == "even") {
    spec.kind = AsetKind::even;
  } else if (text == "odd") {
    spec.kind = AsetKind::odd;
  } else if (text.rfind("div:", 0) == 0) {
    spec.kind = AsetKind::divisible;
    spec.param = parse_int(text.substr(4), "div:<d>");
  } else if (text.rfind("min:", 0) == 0) {
    spec.kind = AsetKind::min_length;
    spec.param = parse_int(text.substr(4), "min:<m>");
  } else if (text.rfind("set:", 0) == 0) {
    spec.kind = AsetKind::explicit_list;
    std::string rest(text.substr(4));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) spec.values.push_back(parse_int(item, "set:<list>"));
  } else {
    throw std::invalid_argument("aset: unrecognized spec '" +
                                std::string(text) + "'");
  }
  return spec;
}

std::string format_aset_spec(const AsetSpec& spec) {
  std::string out = spec.complemented ? "~" : "";
  switch (spec.kind) {
    case AsetKind::even:
      return out + "even";
    case AsetKind::odd:
      return out + "odd";
    case AsetKind::divisible:
      return out + "div:" + std::to_string(spec.param);
    case AsetKind::min_length:
      return out + "min:" + std::to_string(spec.param);
    case AsetKind::explicit_list: {
      out += "set:";
      for (size_t i = 0; i < spec.values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.values[i]);
      }
      return out;
    }
  }
  throw std::logic_error("format_aset_spec: bad kind");
}

}  // namespace cyclekit
