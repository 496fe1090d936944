#include "qglab/galg_io.hpp"

#include <fstream>

namespace qglab {

using nlohmann::json;

json matrix_to_json(const GradedOperator& op) {
    json j;
    const int rows = static_cast<int>(op.mat.rows());
    const int cols = static_cast<int>(op.mat.cols());
    j["rows"] = rows;
    j["cols"] = cols;
    j["parity"] = op.space.parity;
    j["level"] = op.space.level;
    j["headroom"] = op.space.headroom;
    j["op_parity"] = op.parity;
    if (op.level_shift)
        j["level_shift"] = *op.level_shift;
    else
        j["level_shift"] = nullptr;
    json data = json::array();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            data.push_back({op.mat(r, c).real(), op.mat(r, c).imag()});
    j["data"] = std::move(data);
    return j;
}

GradedOperator matrix_from_json(const json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw shape_error("matrix_from_json: missing rows/cols/data");
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    if (rows < 1 || cols < 1 || rows != cols)
        throw shape_error("matrix_from_json: need a square matrix with rows == cols >= 1");
    const auto& data = j.at("data");
    if (static_cast<int>(data.size()) != rows * cols)
        throw shape_error("matrix_from_json: data length != rows*cols");

    GradedSpace s;
    s.dim = rows;
    s.parity = j.contains("parity") ? j.at("parity").get<std::vector<int>>()
                                    : std::vector<int>(rows, 0);
    s.level = j.contains("level") ? j.at("level").get<std::vector<int>>()
                                  : std::vector<int>(rows, 0);
    s.headroom = j.contains("headroom") ? j.at("headroom").get<std::vector<int>>()
                                        : std::vector<int>(rows, GradedSpace::kExact);
    if ((int)s.parity.size() != rows || (int)s.level.size() != rows ||
        (int)s.headroom.size() != rows)
        throw shape_error("matrix_from_json: metadata length mismatch");

    Matrix m(rows, cols);
    int idx = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c, ++idx)
            m(r, c) = Complex(data[idx][0].get<double>(), data[idx][1].get<double>());

    std::optional<int> shift;
    if (j.contains("level_shift") && !j.at("level_shift").is_null())
        shift = j.at("level_shift").get<int>();
    const int op_parity = j.contains("op_parity") ? j.at("op_parity").get<int>() : 0;
    return GradedOperator(std::move(m), std::move(s), op_parity, shift);
}

void save_matrix(const std::string& path, const GradedOperator& op) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("save_matrix: cannot open " + path);
    f << matrix_to_json(op).dump(2) << "\n";
}

GradedOperator load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("load_matrix: cannot open " + path);
    json j;
    try {
        f >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("load_matrix: parse error in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

}  // namespace qglab
