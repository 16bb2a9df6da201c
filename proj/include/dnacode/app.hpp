#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace dnacode::app {

using json = nlohmann::json;

enum class Format { text, json, csv };

Format format_from_string(std::string_view name);
std::string to_string(Format f);

/// One invocation of a library operation. Identical specs give identical reports.
struct ExperimentSpec {
    std::string module;
    std::string operation;
    json parameters = json::object();
    std::uint64_t seed = 0;
    Format format = Format::text;
    std::string output;   ///< report path; empty means the output stream
    std::string alphabet; ///< binary, dna, zN; empty means auto-detect

    json to_json() const;
    static ExperimentSpec from_json(const json& j);
};

struct OperationInfo {
    std::string module;
    std::string operation;
    std::vector<std::string> parameters;
    bool reads_input = false;
    std::string summary;
};

/// Every dispatchable (module, operation) pair.
const std::vector<OperationInfo>& operations();

/// True when the operation consumes input and the parameters do not carry it.
bool needs_input(const ExperimentSpec& spec);

/// Runs the operation and returns the rendered report. Library errors
/// propagate as dnacode::Error.
std::string run(const ExperimentSpec& spec, std::string_view input = {});

/// run() plus report writing and error handling. Errors go to `err` as a
/// JSON object {"error": {...}}. Returns the process exit status: 0 on
/// success, 1 for operation failures, 2 for invalid requests.
int execute(const ExperimentSpec& spec, std::string_view input, std::ostream& out, std::ostream& err);

// --- worked-example regression table --------------------------------------

struct ReproduceConfig {
    /// Added to the VT modulus n+1 in the VT rows; nonzero only in mutation tests.
    std::size_t vt_modulus_skew = 0;
};

struct ReproduceRow {
    std::string group;
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

std::vector<ReproduceRow> reproduce_examples(const ReproduceConfig& cfg = {});

} // namespace dnacode::app
