#ifndef OPSG_TRACE_HPP
#define OPSG_TRACE_HPP

#include <string>
#include <vector>

namespace opsg {

// Ordered log of which construction case fired at each recursion step.
// Purely diagnostic; constructions behave identically with tracing ignored.
struct ConstructionTrace {
    std::vector<std::string> steps;

    void add(std::string s) { steps.push_back(std::move(s)); }
    bool contains(const std::string& needle) const {
        for (const std::string& s : steps)
            if (s.find(needle) != std::string::npos) return true;
        return false;
    }
};

} // namespace opsg

#endif
