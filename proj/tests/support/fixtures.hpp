#pragma once

#include <alo_ipcm/alo_ipcm.hpp>

#include <string>
#include <vector>

#ifndef ALO_IPCM_FIXTURE_DIR
#error "ALO_IPCM_FIXTURE_DIR must be defined"
#endif

namespace alo::testing {

inline std::string fixture_path(const std::string& name) { return std::string(ALO_IPCM_FIXTURE_DIR) + "/" + name + ".json"; }

inline Ipcm fixture(const std::string& name) { return as_ipcm(load_matrix_file(fixture_path(name))); }

/// Fixtures that are reciprocal and of order >= 3.
inline const std::vector<std::string>& reciprocal_fixture_names()
{
    static const std::vector<std::string> names{
        "a1_multiplicative", "a2_fuzzy",          "a3_additive",          "approx_additive",
        "full_not_approx_additive", "liu_additive", "liu_additive_permuted", "small_fuzzy",
        "triad_multiplicative",
    };
    return names;
}

} // namespace alo::testing
