#ifndef NTP_GROUP_FILE_HPP
#define NTP_GROUP_FILE_HPP

// Text group description:
//
//   # comment
//   degree: 5
//   gen: (1,2)
//   gen: (1,2,3,4,5)
//
// "degree:" must come before any "gen:" line; blank lines are ignored.

#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ntp/group.hpp"
#include "ntp/permutation.hpp"

namespace ntp {

class GroupFileError : public std::invalid_argument {
 public:
  GroupFileError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline PermutationGroup read_group(std::istream& in) {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw GroupFileError(lineno, "expected \"key: value\"");
    auto key = detail::trim(line.substr(0, colon));
    auto value = detail::trim(line.substr(colon + 1));
    if (key == "degree") {
      if (degree != 0) throw GroupFileError(lineno, "degree given twice");
      try {
        std::size_t used = 0;
        long long d = std::stoll(std::string(value), &used);
        if (used != value.size() || d <= 0 || static_cast<std::size_t>(d) > max_degree) {
          throw GroupFileError(lineno, "invalid degree \"" + std::string(value) + "\"");
        }
        degree = static_cast<std::size_t>(d);
      } catch (const std::logic_error&) {
        throw GroupFileError(lineno, "invalid degree \"" + std::string(value) + "\"");
      }
    } else if (key == "gen") {
      if (degree == 0) throw GroupFileError(lineno, "\"gen:\" before \"degree:\"");
      try {
        gens.push_back(parse_cycles(value, degree));
      } catch (const CycleParseError& e) {
        throw GroupFileError(lineno, e.what());
      }
    } else {
      throw GroupFileError(lineno, "unknown key \"" + std::string(key) + "\"");
    }
  }
  if (degree == 0) throw GroupFileError(lineno, "missing \"degree:\" line");
  if (gens.empty()) gens.emplace_back(degree);
  return PermutationGroup(std::move(gens));
}

inline PermutationGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file " + path);
  return read_group(in);
}

inline std::string write_group(const PermutationGroup& g) {
  std::ostringstream out;
  out << "degree: " << g.degree() << '\n';
  for (const auto& s : g.generators()) out << "gen: " << format_cycles(s) << '\n';
  return out.str();
}

}  // namespace ntp

#endif  // NTP_GROUP_FILE_HPP
