#include "rimwalk/serialize.hpp"

#include <limits>

#include "rimwalk/errors.hpp"

namespace rimwalk::io {

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json to_json(const Partition& p) {
  Json j = Json::array();
  for (int v : p.parts()) j.push_back(v);
  return j;
}

Json to_json(const IntPolynomial& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(to_json(c));
  return j;
}

Json to_json(const BorderStrip& s) {
  Json j;
  j["inner"] = to_json(s.inner());
  j["outer"] = to_json(s.outer());
  j["height"] = s.height();
  j["length"] = s.length();
  return j;
}

Json to_json(const CharacterTable& t) {
  Json j;
  j["k"] = t.k;
  Json order = Json::array();
  for (const auto& p : t.order) order.push_back(to_json(p));
  j["order"] = std::move(order);
  Json rows = Json::array();
  for (const auto& row : t.entries) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  j["table"] = std::move(rows);
  Json z = Json::array();
  for (const auto& v : t.centralizers) z.push_back(to_json(v));
  j["centralizers"] = std::move(z);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["checked"] = r.checked;
  Json mm = Json::array();
  for (const auto& m : r.mismatches) {
    Json e;
    e["nu"] = to_json(m.nu);
    e["mu"] = to_json(m.mu);
    e["lhs"] = to_json(m.lhs);
    e["rhs"] = to_json(m.rhs);
    e["check"] = m.check;
    mm.push_back(std::move(e));
  }
  j["mismatches"] = std::move(mm);
  j["target"] = r.target;
  j["in_range"] = r.in_range;
  j["pass"] = r.pass();
  return j;
}

Json to_json(const OrthogonalityReport& r) {
  Json j;
  j["k"] = r.k;
  j["max_deviation"] = to_json(r.max_deviation);
  if (r.offending) {
    j["offending"] = Json::array(
        {to_json(r.offending->first), to_json(r.offending->second)});
  } else {
    j["offending"] = nullptr;
  }
  j["orthogonality"] = r.pass() ? "pass" : "fail";
  return j;
}

Json to_json(const ConjectureRow& row) {
  Json j;
  j["n"] = row.n;
  j["multiplicity"] = row.multiplicity;
  j["q_at_minus1"] = to_json(row.q_at_minus1);
  j["positive"] = row.positive;
  j["unimodal"] = row.unimodal;
  j["palindromic"] = row.palindromic;
  j["quotient"] = to_json(row.quotient);
  j["consistent"] = row.consistent();
  return j;
}

Json to_json(const IdentityCheck& c) {
  Json j;
  j["identity"] = c.name;
  j["subject"] = c.subject;
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  j["pass"] = c.pass();
  return j;
}

Json to_json(const VirtualCharacter& psi) {
  Json j;
  j["nu"] = to_json(psi.nu);
  j["n"] = psi.n;
  j["regular"] = psi.regular;
  Json terms = Json::array();
  for (const auto& t : psi.terms) {
    Json e;
    e["sign"] = t.sign;
    e["shape"] = to_json(t.shape);
    e["height"] = t.height;
    terms.push_back(std::move(e));
  }
  j["terms"] = std::move(terms);
  return j;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidPartition("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw InvalidPartition("partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

void write_tsv(std::ostream& os, const CharacterTable& t) {
  os << "shape\\class";
  for (const auto& c : t.order) os << '\t' << format_partition(c);
  os << '\n';
  for (std::size_t r = 0; r < t.dim(); ++r) {
    os << format_partition(t.order[r]);
    for (const auto& v : t.entries[r]) os << '\t' << v;
    os << '\n';
  }
}

}  // namespace rimwalk::io
