#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/report.hpp"

namespace skein {

// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

// Default size cap of a suite: the sizes the identities are certified at.
int default_size(const std::string& suite);

// Runs a suite ("all" for every suite) at the given size cap. Throws
// std::invalid_argument for unknown suites or a cap below 1.
Report run_suite(const std::string& suite, std::optional<int> max = std::nullopt);

// Individual suites, parameterized by their size cap.
Report verify_xbiff(int max_m);
Report verify_idempotents(int max_cells);
Report verify_cd(int max_degree);
Report verify_hook(int max_size);
Report verify_rosso_jones(int max_strands);
Report verify_series(int max_m);
Report verify_hecke(int max_strands);
Report verify_chords(int max_m);
Report verify_pattern();

}  // namespace skein
