#include "gmclock/report.hpp"

#include <string>

#include "gmclock/errors.hpp"

namespace gmclock {

std::string_view method_name(Method m) {
    switch (m) {
    case Method::kerr:          return "kerr";
    case Method::semiclassical: return "semiclassical";
    case Method::gem:           return "gem";
    case Method::oracle:        return "oracle";
    }
    return "unknown";
}

Method method_from_name(std::string_view name) {
    if (name == "kerr") return Method::kerr;
    if (name == "semiclassical") return Method::semiclassical;
    if (name == "gem") return Method::gem;
    if (name == "oracle") return Method::oracle;
    throw InvalidInputError("unknown method '" + std::string(name) +
                            "' (expected kerr, semiclassical, gem or oracle)");
}

}  // namespace gmclock
