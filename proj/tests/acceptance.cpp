// Release gate: runs every acceptance criterion on the full builtin
// registry and prints one line per criterion. Exit status is nonzero if
// any criterion fails.
#include <cstdio>
#include <exception>

#include "adjalg/verify.hpp"

int main() {
    try {
        std::vector<adjalg::CheckResult> results = adjalg::acceptance_suite(false);
        bool ok = true;
        for (const adjalg::CheckResult& r : results) {
            std::printf("%s %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.empty() ? "" : " -- ", r.detail.c_str());
            ok = ok && r.pass;
        }
        return ok ? 0 : 1;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "FAIL (exception) %s\n", ex.what());
        return 1;
    }
}
