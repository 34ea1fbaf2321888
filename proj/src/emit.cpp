#include "hopfchain/emit.hpp"

#include <sstream>

namespace hopfchain {

std::string library_version() { return HOPFCHAIN_VERSION; }

namespace {

std::string join_labels(const HopfInstance& h, const std::vector<Element>& basis) {
  std::string s;
  for (const Element& b : basis) s += "," + h.element_label(b);
  return s;
}

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

}  // namespace

std::string matrix_csv(const HopfInstance& h, const TransitionMatrix& k) {
  std::ostringstream out;
  out << "state" << join_labels(h, k.basis) << '\n';
  for (std::size_t i = 0; i < k.size(); ++i) {
    out << h.element_label(k.basis[i]);
    std::size_t next = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      out << ',';
      if (next < k.rows[i].size() && k.rows[i][next].first == j) {
        out << to_string(k.rows[i][next].second);
        ++next;
      } else {
        out << '0';
      }
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json matrix_json(const HopfInstance& h, const TransitionMatrix& k) {
  nlohmann::ordered_json j;
  j["n"] = k.n;
  j["a"] = k.a;
  j["direction"] = k.direction == Direction::inverse ? "inverse" : "forward";
  auto& basis = j["basis"] = nlohmann::ordered_json::array();
  for (const Element& b : k.basis) basis.push_back(h.element_label(b));
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : k.dense()) {
    auto row = nlohmann::ordered_json::array();
    for (const Rational& v : r) row.push_back(to_string(v));
    rows.push_back(row);
  }
  return j;
}

std::string eigen_csv(const HopfInstance& h, const EigenSystem& sys, Side side) {
  std::ostringstream out;
  out << "side,index,exponent" << join_labels(h, sys.basis) << '\n';
  for (const EigenVector& v : side == Side::left ? sys.left : sys.right) {
    out << side_name(side) << ',' << h.element_label(v.index) << ',' << v.exponent;
    for (const Element& b : sys.basis) out << ',' << to_string(v.coeffs.coeff(b));
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json eigen_json(const HopfInstance& h, const EigenSystem& sys, bool certificate) {
  nlohmann::ordered_json j;
  j["n"] = sys.n;
  auto& basis = j["basis"] = nlohmann::ordered_json::array();
  for (const Element& b : sys.basis) basis.push_back(h.element_label(b));
  for (Side side : {Side::left, Side::right}) {
    auto arr = nlohmann::ordered_json::array();
    for (const EigenVector& v : side == Side::left ? sys.left : sys.right) {
      nlohmann::ordered_json e;
      e["index"] = h.element_label(v.index);
      e["exponent"] = v.exponent;
      auto coeffs = nlohmann::ordered_json::array();
      for (const Element& b : sys.basis) coeffs.push_back(to_string(v.coeffs.coeff(b)));
      e["coeffs"] = coeffs;
      arr.push_back(e);
    }
    j[side_name(side)] = arr;
  }
  j["certificate"] = certificate ? "pass" : "fail";
  return j;
}

std::string trajectory_text(const HopfInstance& h, const std::vector<Element>& path) {
  std::string s;
  for (const Element& b : path) s += h.element_label(b) + '\n';
  return s;
}

nlohmann::ordered_json quasisym_json(const QuasisymFunction& chi) {
  nlohmann::ordered_json j;
  j["degree"] = chi.degree;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [alpha, c] : chi.coeffs) {
    std::string key;
    for (std::size_t i = 0; i < alpha.size(); ++i) key += (i ? "," : "") + std::to_string(alpha[i]);
    coeffs[key] = to_string(c);
  }
  j["coeffs"] = coeffs;
  return j;
}

}  // namespace hopfchain
