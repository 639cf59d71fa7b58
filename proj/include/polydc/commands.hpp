#pragma once

#include <iosfwd>
#include <string>

#include "polydc/io.hpp"

namespace polydc {

// Command entry points shared by the command line binary and the tests.
// Exit code contract: 0 a solution exists / was computed, 2 certified
// no-solution, 1 usage or input error.

int run_check(const std::string& path, const std::string& method, std::ostream& out,
              std::ostream& err);

int run_solve(const std::string& path, const std::string& method, const std::string& output,
              std::ostream& out, std::ostream& err);

int run_gen(const std::string& family, int n, int mg, int mh, const std::string& out_path,
            std::ostream& err);

int run_bench(const std::string& family, int lo, int hi, int mg, int mh,
              const std::string& out_path, std::ostream& err);

// The timed solve pipeline behind run_solve and run_bench; mirrors the
// solver module phase by phase so each phase can be clocked.
ResultRecord timed_solve(int n, const PolyFunc& g, const PolyFunc& h, Method method);

}  // namespace polydc
