#pragma once

#include "domdimlab/homology.hpp"
#include "domdimlab/nakayama.hpp"
#include "domdimlab/quivalg.hpp"

#include <json.hpp>

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace domdimlab::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";
inline constexpr std::size_t kDefaultCutoff = 64;

enum ExitCode : int { ok = 0, falsified = 1, usage = 2, undetermined = 3 };

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------ file formats

json field_to_json(const exact::Field& f);
json matrix_to_json(const exact::Matrix& m);
exact::Matrix matrix_from_json(const exact::Field& f, const json& j, std::size_t cols);

json nakayama_to_json(const nakayama::NakAlgebra& a);
json quiver_to_json(const quivalg::QuiverSpec& q);
/// kind "table": sparse structure constants as [i, j, k, "scalar"].
json algebra_to_json(const quivalg::AlgebraTable& a);

/// Parsed algebra description; table is always set (Nakayama input is bridged
/// over the file's field, Q when absent).
struct AlgebraInput {
    std::string kind;
    std::optional<nakayama::NakAlgebra> nakayama;
    std::optional<quivalg::QuiverSpec> quiver;
    quivalg::AlgebraPtr table;
};
AlgebraInput algebra_from_json(const json& j);
AlgebraInput load_algebra_file(const std::string& path);

json module_to_json(const homology::Representation& m);
homology::Representation module_from_json(const quivalg::AlgebraPtr& a, const json& j);

std::string sha256_hex(const std::string& data);

// ------------------------------------------------------------ module specs

/// simple[:v] | projective:v | dual-regular | omega:T:SPEC | pair i,k
struct ModuleSpec {
    enum class Kind { simple, projective, dual_regular, omega, pair } kind = Kind::simple;
    std::string vertex;  // empty: vertex 0
    int t = 0;
    int i = 0, k = 0;
    std::shared_ptr<ModuleSpec> inner;
    std::string str() const;
};
ModuleSpec parse_module_spec(const std::string& text);

nakayama::ModuleMultiset realize(const nakayama::NakAlgebra& a, const ModuleSpec& s);
homology::Representation realize(const quivalg::AlgebraPtr& a, const ModuleSpec& s);

// ------------------------------------------------------------ suites

struct CheckResult {
    bool pass = false;
    json detail = json::object();
};

struct SuiteItem {
    std::string name;
    std::function<CheckResult()> run;
};

/// paper-core | oracle-cross | rigidity-sweep
std::vector<SuiteItem> suite(const std::string& name, std::size_t cutoff);
std::vector<std::string> suite_names();

/// Runs items on up to jobs threads; results keep the item order. An item
/// that throws fails with the message as detail.
std::vector<CheckResult> run_items(const std::vector<SuiteItem>& items, std::size_t jobs);

// ------------------------------------------------------------ entry point

/// Full command line without the program name. Writes the JSON (or CSV)
/// report to out, diagnostics and wall time to err; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Flattens report results into CSV rows.
std::string to_csv(const json& results);

}  // namespace domdimlab::cli
