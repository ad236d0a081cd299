#include "grasp/algebra_json.hpp"

#include <fstream>
#include <stdexcept>

namespace grasp {

using nlohmann::json;

json algebra_to_json(const GradedAlgebra& A) {
  json doc;
  doc["name"] = A.name();
  doc["dim"] = A.dim();
  doc["parity"] = A.parities();
  json sig = json::array();
  for (const auto& op : A.signature().ops()) sig.push_back({{"op", op.id}, {"arity", op.arity}});
  doc["signature"] = sig;
  json tensors = json::object();
  for (size_t op = 0; op < A.signature().size(); ++op) {
    const OpTensor& t = A.tensor(op);
    json rows = json::array();
    for (size_t s = 0; s < t.keys.size(); ++s) {
      std::vector<uint32_t> in(t.arity);
      uint64_t k = t.keys[s];
      for (uint32_t p = t.arity; p-- > 0;) {
        in[p] = (uint32_t)(k % std::max<uint32_t>(A.dim(), 1));
        k /= std::max<uint32_t>(A.dim(), 1);
      }
      for (const auto& [out, c] : t.values[s]) {
        if (!c.fits_int64())
          throw std::invalid_argument("algebra_to_json: coefficient exceeds int64");
        json row = json::array();
        for (uint32_t i : in) row.push_back(i);
        row.push_back(out);
        row.push_back(c.num_int64());
        row.push_back(c.den_int64());
        rows.push_back(std::move(row));
      }
    }
    tensors[A.signature().op(op).id] = std::move(rows);
  }
  doc["tensors"] = std::move(tensors);
  return doc;
}

AlgebraPtr algebra_from_json(const json& doc) {
  try {
    uint32_t dim = doc.at("dim").get<uint32_t>();
    std::vector<uint8_t> parity = doc.at("parity").get<std::vector<uint8_t>>();
    std::vector<Operation> ops;
    for (const auto& o : doc.at("signature"))
      ops.push_back({o.at("op").get<std::string>(), o.at("arity").get<uint32_t>()});
    Signature sig(std::move(ops));

    AlgebraBuilder b(dim, std::move(parity), sig);
    const json& tensors = doc.at("tensors");
    for (size_t op = 0; op < sig.size(); ++op) {
      const std::string& id = sig.op(op).id;
      if (!tensors.contains(id)) continue;
      uint32_t ar = sig.op(op).arity;
      for (const auto& row : tensors.at(id)) {
        if (row.size() != ar + 3)
          throw std::invalid_argument("tensor row has wrong length for op '" + id + "'");
        std::vector<uint32_t> in(ar);
        for (uint32_t p = 0; p < ar; ++p) in[p] = row.at(p).get<uint32_t>();
        uint32_t out = row.at(ar).get<uint32_t>();
        int64_t num = row.at(ar + 1).get<int64_t>();
        int64_t den = row.at(ar + 2).get<int64_t>();
        b.add(op, in, out, Rational((long)num, (long)den));
      }
    }
    return b.build(doc.value("name", "algebra"));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("algebra_from_json: ") + e.what());
  }
}

AlgebraPtr load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
  }
  return algebra_from_json(doc);
}

void save_algebra_file(const GradedAlgebra& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write algebra file: " + path);
  out << algebra_to_json(A).dump(2) << "\n";
}

}  // namespace grasp
