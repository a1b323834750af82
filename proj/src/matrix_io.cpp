#include "perspecta/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace perspecta {

nlohmann::json matrix_to_json(const HermitianMatrix& m) {
  const Matrix& e = m.entries();
  bool has_imag = false;
  for (Eigen::Index i = 0; i < e.rows() && !has_imag; ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
      if (e(i, j).imag() != 0.0) {
        has_imag = true;
        break;
      }
    }
  }
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
      if (has_imag) {
        data.push_back({e(i, j).real(), e(i, j).imag()});
      } else {
        data.push_back(e(i, j).real());
      }
    }
  }
  return nlohmann::json{
      {"dim", m.dim()}, {"complex", has_imag}, {"data", std::move(data)}};
}

HermitianMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("data")) {
    throw ParseError(
        "matrix JSON must be an object with 'dim' and 'data' fields");
  }
  if (!j["dim"].is_number_integer()) {
    throw ParseError("matrix JSON: 'dim' must be an integer");
  }
  const auto dim = j["dim"].get<Eigen::Index>();
  if (dim < 1) throw ParseError("matrix JSON: 'dim' must be positive");
  const bool is_complex = j.value("complex", false);
  const auto& data = j["data"];
  if (!data.is_array() ||
      data.size() != static_cast<std::size_t>(dim * dim)) {
    std::ostringstream os;
    os << "matrix JSON: 'data' must hold dim*dim = " << dim * dim
       << " entries, got " << (data.is_array() ? data.size() : 0);
    throw ParseError(os.str());
  }

  Matrix m(dim, dim);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j2 = 0; j2 < dim; ++j2, ++idx) {
      const auto& cell = data[idx];
      double re = 0.0, im = 0.0;
      if (is_complex) {
        if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
            !cell[1].is_number()) {
          throw ParseError(
              "matrix JSON: complex entries must be [re, im] pairs");
        }
        re = cell[0].get<double>();
        im = cell[1].get<double>();
      } else {
        if (!cell.is_number()) {
          throw ParseError("matrix JSON: real entries must be numbers");
        }
        re = cell.get<double>();
      }
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError("matrix JSON: entries must be finite");
      }
      m(i, j2) = Complex(re, im);
    }
  }
  try {
    return HermitianMatrix(m);
  } catch (const NumericError& e) {
    throw ParseError(e.what());
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

HermitianMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open matrix file: " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in " + path.string() + ": " + e.what());
  }
  try {
    return matrix_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_matrix(const std::filesystem::path& path, const HermitianMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open output file: " + path.string());
  }
  out << matrix_to_json(m).dump(2) << "\n";
}

}  // namespace perspecta
