#pragma once

#include "bpmc/branching_process.hpp"
#include "bpmc/process_format.hpp"

#include <string>
#include <vector>

#ifndef BPMC_TEST_DATA_DIR
#define BPMC_TEST_DATA_DIR "tests/data"
#endif

namespace bpmc::testsupport {

inline std::string data_path(const std::string& name) {
    return std::string(BPMC_TEST_DATA_DIR) + "/" + name;
}

inline BranchingProcess intro_process() { return parse_process_file(data_path("intro.bp")); }

inline BranchingProcess intro_swapped_process() {
    return parse_process_file(data_path("intro-swapped.bp"));
}

inline BranchingProcess running_process() { return parse_process_file(data_path("running.bp")); }

inline std::vector<std::size_t> indices_of(const BranchingProcess& bp,
                                           const std::vector<std::string>& names) {
    std::vector<std::size_t> out;
    for (const std::string& name : names) out.push_back(bp.type_index(name));
    return out;
}

inline std::vector<std::string> names_of(const BranchingProcess& bp,
                                         const std::vector<std::size_t>& indices) {
    std::vector<std::string> out;
    for (std::size_t i : indices) out.push_back(bp.type_name(i));
    return out;
}

}  // namespace bpmc::testsupport
