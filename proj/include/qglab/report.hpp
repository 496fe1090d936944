#pragma once

#include <map>
#include <string>

namespace qglab {

/// Structured result of one verification: residual against tolerance plus
/// free-form provenance metadata (q used, dims, guard width, ...).
/// Invariant: pass <=> residual <= tolerance.
struct CheckReport {
    std::string check_id;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::map<std::string, std::string> meta;

    static CheckReport make(std::string id, double residual, double tolerance,
                            std::map<std::string, std::string> meta = {}) {
        CheckReport r;
        r.check_id = std::move(id);
        r.residual = residual;
        r.tolerance = tolerance;
        r.pass = residual <= tolerance;
        r.meta = std::move(meta);
        return r;
    }
};

}  // namespace qglab
