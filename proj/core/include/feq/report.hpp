#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "feq/analysis.hpp"
#include "feq/parser.hpp"
#include "feq/solver.hpp"

namespace feq {

enum class OutputFormat { Text, Json };

struct CliConfig {
    enum class Command { Analyze, Validate, Verify };
    Command command = Command::Analyze;
    std::string input_path;
    OutputFormat format = OutputFormat::Text;
    std::optional<int> max_degree;
    int precision_bits = 128;
    int max_precision_bits = 65536;
};

/// Runs one command against one input file. Reports go to `out`,
/// diagnostics to `err`. Exit codes: 0 result produced (NONE and
/// SYNTHESIS_REQUIRED verdicts are results), 1 validation failure,
/// 2 parse error, 3 precision or field-degree limit, 66 unreadable input,
/// 70 internal error.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Deterministic JSON report (byte-for-byte stable for a fixed input).
/// All exact values are canonical strings, never floating point.
std::string report_json(const EquationSpec& spec, const AnalysisReport& report,
                        const SolutionBasis& basis);
std::string report_text(const EquationSpec& spec, const AnalysisReport& report,
                        const SolutionBasis& basis);
std::string validation_json(const ValidationReport& vr);
std::string validation_text(const ValidationReport& vr);

/// Canonical input-format rendering of a spec (with optional f/F blocks);
/// parsing it back yields an identical spec.
std::string serialize_spec(const EquationSpec& spec,
                           const std::vector<FieldElement>* f = nullptr,
                           const std::vector<FieldElement>* F = nullptr);

} // namespace feq
