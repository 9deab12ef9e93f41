#ifndef ETALE_ERRORS_HPP
#define ETALE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etale {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define ETALE_DEFINE_ERROR(name)                                         \
    struct name : error {                                                \
        explicit name(const std::string& what) : error(what) {}          \
    }

ETALE_DEFINE_ERROR(descriptor_mismatch);
ETALE_DEFINE_ERROR(division_by_zero);
ETALE_DEFINE_ERROR(precision_exhausted);
ETALE_DEFINE_ERROR(unsupported_characteristic);
ETALE_DEFINE_ERROR(unsupported_field);
ETALE_DEFINE_ERROR(unsupported_degree);
ETALE_DEFINE_ERROR(zero_input);
ETALE_DEFINE_ERROR(negative_input);
ETALE_DEFINE_ERROR(constant_input);
ETALE_DEFINE_ERROR(hensel_hypothesis_failed);
ETALE_DEFINE_ERROR(infinite_field);
ETALE_DEFINE_ERROR(index_out_of_range);
ETALE_DEFINE_ERROR(dimension_mismatch);
ETALE_DEFINE_ERROR(dimension_too_large);
ETALE_DEFINE_ERROR(degree_mismatch);
ETALE_DEFINE_ERROR(degree_too_small);
ETALE_DEFINE_ERROR(degree_too_large);
ETALE_DEFINE_ERROR(degenerate_degree);
ETALE_DEFINE_ERROR(not_irreducible);
ETALE_DEFINE_ERROR(budget_exceeded);
ETALE_DEFINE_ERROR(zero_scale);
ETALE_DEFINE_ERROR(witness_missing);
ETALE_DEFINE_ERROR(usage_error);

#undef ETALE_DEFINE_ERROR

}  // namespace etale

#endif
