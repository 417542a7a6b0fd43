#pragma once

// Versioned JSON documents for instances, colorings and reports. One format
// for everything, emitted canonically so identical inputs produce identical
// bytes. Field layout is described in docs/FORMAT.md.

#include <stdexcept>
#include <string>

#include "core.hpp"
#include "oracle.hpp"

namespace fch::doc {

class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string field_path, const std::string& message)
        : std::runtime_error(field_path.empty() ? message : field_path + ": " + message),
          path(std::move(field_path)) {}
    std::string path;
};

Instance parse_instance(const std::string& text);
std::string emit_instance(const Instance& inst);

// Reads the "coloring" object of a coloring or report document.
Coloring parse_coloring(const std::string& text, Vertex vertex_count);

std::string emit_solve_report(const SolveReport& report);
std::string solve_report_text(const SolveReport& report);

std::string emit_oracle_result(const oracle::OracleResult& result);
std::string oracle_result_text(const oracle::OracleResult& result);

std::string emit_free_check(const oracle::FreeCheckResult& result);
std::string free_check_text(const oracle::FreeCheckResult& result);

std::string emit_validation(const ValidationResult& result);
std::string validation_text(const ValidationResult& result);

}  // namespace fch::doc
