#include <algorithm>
#include <cstdlib>
#include <iostream>

#include "lplab/acceptance.hpp"

int main(int argc, char** argv) {
    lplab::AcceptanceOptions opt;
    if (const char* t = std::getenv("LPLAB_THREADS")) opt.threads = std::max(1, std::atoi(t));
    bool ok = true;
    for (int id = 1; id <= lplab::kCriteria; ++id) {
        if (argc > 1 && std::atoi(argv[1]) != id) continue;
        auto r = lplab::run_criterion(id, opt);
        std::cout << lplab::format_result(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
