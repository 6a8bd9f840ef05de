#include "hocd/report.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace hocd::report {

std::string encoding_note(const Field& field) {
  std::ostringstream os;
  os << "element i = sum_j d_j " << field.characteristic() << "^j (0 <= d_j < " << field.characteristic()
     << ") stands for sum_j d_j x^j modulo the modulus; modulus coefficients constant term first";
  return os.str();
}

Json field_header(const Field& field) {
  Json j;
  j["p"] = field.characteristic();
  j["n"] = field.degree();
  j["order"] = field.order();
  j["modulus"] = field.modulus();
  j["encoding"] = encoding_note(field);
  return j;
}

namespace {

Json witnesses_json(const std::vector<Witness>& witnesses) {
  Json arr = Json::array();
  for (const auto& w : witnesses) {
    Json item;
    item["shifts"] = w.shifts;
    item["b"] = w.b;
    arr.push_back(std::move(item));
  }
  return arr;
}

Json by_c_json(const std::map<Element, std::uint32_t>& by_c) {
  Json arr = Json::array();
  for (auto [c, v] : by_c) arr.push_back(Json::array({c, v}));
  return arr;
}

}  // namespace

Json to_json(const SpectrumReport& r) {
  Json j;
  j["c"] = r.c;
  j["t"] = r.t;
  j["max_count"] = r.max_count;
  Json hist = Json::array();
  for (auto [k, mult] : r.histogram) hist.push_back(Json::array({k, mult}));
  j["histogram"] = std::move(hist);
  j["witnesses"] = witnesses_json(r.witnesses);
  j["search_domain"] = {{"a1_fixed_to_1", r.domain.power_reduction},
                        {"classical_exclusion", std::string(r.domain.exclusion)},
                        {"tuples", r.domain.tuples}};
  return j;
}

Json to_json(const InverseCaseReport& r) {
  Json j;
  j["n"] = r.n;
  j["max_c_eq_1"] = r.classical_max();
  j["max_c_not_0_1"] = r.generic_max();
  j["argmax_c_not_0_1"] = r.generic.c;
  j["max_c_eq_0"] = r.zero_max();
  j["bound_le_6"] = r.bound_satisfied;
  j["quartic_cross_check"] = r.quartic_cross_check ? Json(*r.quartic_cross_check) : Json();
  j["attains_6"] = r.attains_six;
  j["witnesses"] = {{"c_eq_1", witnesses_json(r.classical.witnesses)},
                    {"c_not_0_1", witnesses_json(r.generic.witnesses)},
                    {"c_eq_0", witnesses_json(r.zero.witnesses)}};
  j["max_by_c"] = by_c_json(r.generic_by_c);
  Json classical_counts = Json::array();
  for (auto [k, mult] : r.classical.histogram) classical_counts.push_back(k);
  j["classical_counts"] = std::move(classical_counts);
  return j;
}

Json to_json(const GoldSecondOrder& r) {
  Json j;
  j["k"] = r.k;
  j["exponent"] = r.exponent;
  j["max_count"] = r.max_count;
  j["bound"] = r.bound;
  j["attained"] = r.attained;
  j["argmax_c"] = r.argmax_c;
  j["witness"] = witnesses_json({r.witness}).front();
  j["max_by_c"] = by_c_json(r.by_c);
  return j;
}

Json to_json(const SubfieldUniformity& r) {
  Json j;
  j["t"] = r.t;
  j["expected"] = r.expected;
  j["holds"] = r.holds;
  j["by_c"] = by_c_json(r.by_c);
  return j;
}

Json to_json(const QuadraticCheck& r) {
  Json j;
  j["h"] = r.h;
  j["delta"] = r.delta;
  j["holds"] = r.holds;
  Json orders = Json::array();
  for (const auto& s : r.by_order) orders.push_back(to_json(s));
  j["by_order"] = std::move(orders);
  return j;
}

std::string histogram_cell(const std::map<std::uint32_t, std::uint64_t>& histogram) {
  std::string out;
  for (auto [k, mult] : histogram) {
    if (!out.empty()) out += ';';
    out += std::to_string(k) + ':' + std::to_string(mult);
  }
  return out;
}

std::string witness_cell(const std::vector<Witness>& witnesses) {
  if (witnesses.empty()) return {};
  std::string out;
  for (Element a : witnesses.front().shifts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a);
  }
  return out + '|' + std::to_string(witnesses.front().b);
}

std::string spectrum_csv(const Field& field, const std::string& function,
                         const std::map<Element, SpectrumReport>& reports) {
  std::ostringstream os;
  os << "# schema " << kSchemaVersion << '\n';
  os << "# field p=" << field.characteristic() << " n=" << field.degree() << " modulus=";
  for (std::size_t i = 0; i < field.modulus().size(); ++i) os << (i ? "," : "") << field.modulus()[i];
  os << '\n';
  os << "# encoding " << encoding_note(field) << '\n';
  os << "# function " << function << '\n';
  os << "c_index,t,max_count,histogram,first_witness\n";
  for (const auto& [c, r] : reports)
    os << c << ',' << r.t << ',' << r.max_count << ',' << histogram_cell(r.histogram) << ','
       << witness_cell(r.witnesses) << '\n';
  return os.str();
}

std::filesystem::path meta_path(const std::filesystem::path& json_path) {
  auto p = json_path;
  p += ".meta.json";
  return p;
}

void write_files_atomically(const std::vector<std::pair<std::filesystem::path, std::string>>& files) {
  std::vector<std::filesystem::path> temps;
  auto cleanup = [&temps] {
    std::error_code ec;
    for (const auto& t : temps) std::filesystem::remove(t, ec);
  };
  for (const auto& [path, content] : files) {
    auto tmp = path;
    tmp += ".tmp";
    temps.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) {
      cleanup();
      throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::error_code ec;
    std::filesystem::rename(temps[i], files[i].first, ec);
    if (ec) {
      cleanup();
      throw Error(ErrorKind::InvalidArgument, "cannot move output into " + files[i].first.string() + ": " + ec.message());
    }
  }
}

}  // namespace hocd::report
