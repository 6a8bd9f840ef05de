#include <charconv>
#include <fstream>
#include <string>

#include "hocd/function.hpp"

namespace hocd {

std::vector<std::uint64_t> read_index_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path.string());
  std::vector<std::uint64_t> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const char* it = line.data();
    const char* end = it + line.size();
    while (it != end) {
      if (*it == ' ' || *it == '\t' || *it == '\r' || *it == ',') {
        ++it;
        continue;
      }
      std::uint64_t v = 0;
      const auto [next, ec] = std::from_chars(it, end, v);
      if (ec != std::errc{})
        throw Error(ErrorKind::InvalidArgument, path.string() + ":" + std::to_string(lineno) + ": not a decimal index");
      out.push_back(v);
      it = next;
    }
  }
  return out;
}

namespace {

std::vector<Element> as_elements(const Field& field, const std::vector<std::uint64_t>& values) {
  std::vector<Element> out;
  out.reserve(values.size());
  for (std::uint64_t v : values) {
    if (v >= field.order())
      throw Error(ErrorKind::InvalidElement, std::to_string(v) + " is not an element of a field of order " +
                                                 std::to_string(field.order()));
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

}  // namespace

FieldFunction load_function(const FieldPtr& field, std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::InvalidArgument, "function descriptor must be monomial:d, poly:<file> or lut:<file>");
  const std::string_view kind = descriptor.substr(0, colon);
  const std::string_view arg = descriptor.substr(colon + 1);
  if (kind == "monomial") {
    std::uint64_t d = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), d);
    if (ec != std::errc{} || ptr != arg.data() + arg.size() || arg.empty())
      throw Error(ErrorKind::InvalidArgument, "bad monomial exponent '" + std::string(arg) + "'");
    return FieldFunction::from_monomial(field, d);
  }
  if (kind == "poly") return FieldFunction::from_univariate(field, as_elements(*field, read_index_file(std::string(arg))));
  if (kind == "lut") {
    auto table = as_elements(*field, read_index_file(std::string(arg)));
    if (table.size() != field->order())
      throw Error(ErrorKind::InvalidArgument, "lookup table has " + std::to_string(table.size()) +
                                                  " entries, expected " + std::to_string(field->order()));
    return FieldFunction(field, std::move(table));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown function kind '" + std::string(kind) + "'");
}

}  // namespace hocd
