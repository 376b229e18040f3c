#include "wilf/wilf.h"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wilf/asymptotics.hpp"
#include "wilf/cover.hpp"
#include "wilf/enumerate.hpp"
#include "wilf/errors.hpp"
#include "wilf/family.hpp"
#include "wilf/partition.hpp"

struct wilf_text {
    std::string value;
};

struct wilf_partition {
    wilf::Partition value;
};

struct wilf_partition_list {
    std::vector<wilf_partition> items;
};

struct wilf_cover_set {
    wilf::CoverSet value;
};

struct wilf_family {
    wilf::FamilyParams params;
    wilf::CoverSet cover;
    wilf::PermutationSampler sampler;
};

namespace {

thread_local std::string last_error;

wilf_status fail(wilf_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs `body`, translating library exceptions into status codes.
template <typename Body>
wilf_status guarded(Body&& body) {
    try {
        return body();
    } catch (const wilf::InvalidPartition& e) {
        return fail(WILF_ERR_PARSE, e.what());
    } catch (const wilf::NotWilf& e) {
        return fail(WILF_ERR_NOT_WILF, e.what());
    } catch (const wilf::LimitExceeded& e) {
        return fail(WILF_ERR_LIMIT, e.what());
    } catch (const wilf::CoverTooShallow& e) {
        return fail(WILF_ERR_COVER_TOO_SHALLOW, e.what());
    } catch (const wilf::ArithmeticOverflow& e) {
        return fail(WILF_ERR_OVERFLOW, e.what());
    } catch (const wilf::IntegrityError& e) {
        return fail(WILF_ERR_INTEGRITY, e.what());
    } catch (const wilf::InvalidArgument& e) {
        return fail(WILF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(WILF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(WILF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(WILF_ERR_INTERNAL, "unknown error");
    }
}

wilf_status null_argument(const char* name) {
    return fail(WILF_ERR_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
}

wilf_status emit_text(std::string value, wilf_text** out) {
    *out = new wilf_text{std::move(value)};
    return WILF_OK;
}

wilf_status emit_partition(wilf::Partition value, wilf_partition** out) {
    *out = new wilf_partition{std::move(value)};
    return WILF_OK;
}

}  // namespace

extern "C" {

const char* wilf_version(void) { return "1.0.0"; }

const char* wilf_status_name(wilf_status status) {
    switch (status) {
        case WILF_OK: return "ok";
        case WILF_ERR_INVALID_ARGUMENT: return "invalid argument";
        case WILF_ERR_PARSE: return "invalid partition";
        case WILF_ERR_NOT_WILF: return "not a Wilf partition";
        case WILF_ERR_NO_COVER: return "no fixed point exists";
        case WILF_ERR_INFEASIBLE: return "infeasible family member";
        case WILF_ERR_LIMIT: return "feasibility limit exceeded";
        case WILF_ERR_COVER_TOO_SHALLOW: return "cover set too shallow";
        case WILF_ERR_OVERFLOW: return "arithmetic overflow";
        case WILF_ERR_INTEGRITY: return "integrity check failed";
        case WILF_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* wilf_last_error(void) { return last_error.c_str(); }

const char* wilf_text_data(const wilf_text* text) { return text ? text->value.c_str() : ""; }
size_t wilf_text_size(const wilf_text* text) { return text ? text->value.size() : 0; }
void wilf_text_free(wilf_text* text) { delete text; }

wilf_status wilf_partition_parse(const char* text, wilf_partition** out) {
    if (!text) return null_argument("text");
    if (!out) return null_argument("out");
    return guarded([&] { return emit_partition(wilf::Partition::parse(text), out); });
}

wilf_status wilf_partition_parse_json(const char* json, wilf_partition** out) {
    if (!json) return null_argument("json");
    if (!out) return null_argument("out");
    return guarded([&] { return emit_partition(wilf::Partition::parse_json(json), out); });
}

wilf_status wilf_partition_from_terms(const uint64_t* parts, const uint64_t* multiplicities, size_t count,
                                      wilf_partition** out) {
    if (count > 0 && (!parts || !multiplicities)) return null_argument("parts/multiplicities");
    if (!out) return null_argument("out");
    return guarded([&] {
        std::vector<wilf::Term> terms;
        terms.reserve(count);
        for (size_t i = 0; i < count; ++i) terms.push_back({parts[i], multiplicities[i]});
        return emit_partition(wilf::Partition::canonicalize(std::move(terms)), out);
    });
}

wilf_partition* wilf_partition_clone(const wilf_partition* p) {
    if (!p) return nullptr;
    return new (std::nothrow) wilf_partition{p->value};
}

void wilf_partition_free(wilf_partition* p) { delete p; }

size_t wilf_partition_term_count(const wilf_partition* p) { return p ? p->value.distinct_part_count() : 0; }

wilf_status wilf_partition_term(const wilf_partition* p, size_t index, uint64_t* part, uint64_t* multiplicity) {
    if (!p) return null_argument("p");
    if (index >= p->value.terms().size()) return fail(WILF_ERR_INVALID_ARGUMENT, "term index out of range");
    const wilf::Term& t = p->value.terms()[index];
    if (part) *part = t.part;
    if (multiplicity) *multiplicity = t.multiplicity;
    return WILF_OK;
}

wilf_status wilf_partition_weight(const wilf_partition* p, uint64_t* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = p->value.weight().to_u64();
        return WILF_OK;
    });
}

int wilf_partition_is_wilf(const wilf_partition* p) { return p && p->value.is_wilf() ? 1 : 0; }
int wilf_partition_is_fixed_point(const wilf_partition* p) { return p && p->value.is_fixed_point() ? 1 : 0; }

int wilf_partition_equal(const wilf_partition* a, const wilf_partition* b) {
    return a && b && a->value == b->value ? 1 : 0;
}

wilf_status wilf_partition_involute(const wilf_partition* p, wilf_partition** out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { return emit_partition(p->value.involute(), out); });
}

wilf_status wilf_partition_to_text(const wilf_partition* p, wilf_text** out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { return emit_text(p->value.to_string(), out); });
}

wilf_status wilf_partition_to_json(const wilf_partition* p, wilf_text** out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { return emit_text(p->value.to_json(), out); });
}

wilf_status wilf_count(wilf_count_kind kind, uint64_t n, uint64_t limit, wilf_text** out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        switch (kind) {
            case WILF_COUNT_WILF:
                return emit_text(wilf::count_wilf(n, limit ? limit : wilf::kWilfCountLimit).to_string(), out);
            case WILF_COUNT_FIXED:
                return emit_text(wilf::count_fixed(n, limit ? limit : wilf::kFixedCountLimit).to_string(), out);
            case WILF_COUNT_FIXED_ORACLE:
                return emit_text(wilf::count_fixed_oracle(n, limit ? limit : wilf::kOracleLimit).to_string(), out);
        }
        return fail(WILF_ERR_INVALID_ARGUMENT, "unknown count kind");
    });
}

wilf_status wilf_enumerate(wilf_enum_mode mode, uint64_t n, uint64_t limit, wilf_partition_list** out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        auto list = std::make_unique<wilf_partition_list>();
        const auto collect = [&](const wilf::Partition& p) { list->items.push_back({p}); };
        switch (mode) {
            case WILF_ENUM_ALL:
            case WILF_ENUM_WILF: {
                const uint64_t guard = limit ? limit : wilf::kWilfCountLimit;
                if (n > guard) {
                    throw wilf::LimitExceeded("enumeration for n=" + std::to_string(n) +
                                              " exceeds the feasibility limit " + std::to_string(guard));
                }
                if (mode == WILF_ENUM_ALL) {
                    wilf::for_each_partition(n, collect);
                } else {
                    wilf::for_each_wilf(n, collect);
                }
                break;
            }
            case WILF_ENUM_FIXED:
                wilf::for_each_fixed_structure(
                    n, [&](const wilf::FixedPointStructure& s) { collect(s.decode()); }, wilf::kNoLabelCap,
                    limit ? limit : wilf::kFixedCountLimit);
                break;
            default:
                return fail(WILF_ERR_INVALID_ARGUMENT, "unknown enumeration mode");
        }
        *out = list.release();
        return WILF_OK;
    });
}

size_t wilf_partition_list_size(const wilf_partition_list* list) { return list ? list->items.size() : 0; }

const wilf_partition* wilf_partition_list_get(const wilf_partition_list* list, size_t index) {
    if (!list || index >= list->items.size()) return nullptr;
    return &list->items[index];
}

void wilf_partition_list_free(wilf_partition_list* list) { delete list; }

uint64_t wilf_max_distinct_parts(uint64_t n) { return wilf::max_distinct_parts(n); }

wilf_status wilf_cover_set_build(size_t depth, wilf_cover_set** out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = new wilf_cover_set{wilf::CoverSet::build(depth)};
        return WILF_OK;
    });
}

wilf_status wilf_cover_set_for_weight(uint64_t n, wilf_cover_set** out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = new wilf_cover_set{wilf::CoverSet::for_weight(n)};
        return WILF_OK;
    });
}

void wilf_cover_set_free(wilf_cover_set* cs) { delete cs; }

size_t wilf_cover_set_depth(const wilf_cover_set* cs) { return cs ? cs->value.depth() : 0; }

wilf_status wilf_cover_set_a(const wilf_cover_set* cs, size_t k, uint64_t* out) {
    if (!cs) return null_argument("cs");
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = cs->value.a(k);
        return WILF_OK;
    });
}

wilf_status wilf_cover_set_b(const wilf_cover_set* cs, size_t k, uint64_t* out) {
    if (!cs) return null_argument("cs");
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = cs->value.b(k).to_u64();
        return WILF_OK;
    });
}

wilf_status wilf_cover_is_member(const wilf_cover_set* cs, uint64_t x, int* out) {
    if (!cs) return null_argument("cs");
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = wilf::is_cover_member(x, cs->value) ? 1 : 0;
        return WILF_OK;
    });
}

wilf_status wilf_cover_smallest_non_members(const wilf_cover_set* cs, size_t t, uint64_t* out) {
    if (!cs) return null_argument("cs");
    if (t > 0 && !out) return null_argument("out");
    return guarded([&] {
        const auto xs = wilf::smallest_non_members(t, cs->value);
        std::copy(xs.begin(), xs.end(), out);
        return WILF_OK;
    });
}

wilf_status wilf_fixed_point_cover(const wilf_cover_set* cs, uint64_t n, wilf_partition** out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        std::optional<wilf::Partition> cover;
        if (cs) {
            cover = wilf::fixed_point_cover(n, cs->value);
        } else {
            cover = wilf::fixed_point_cover(n, wilf::CoverSet::for_weight(n));
        }
        if (!cover) {
            return fail(WILF_ERR_NO_COVER,
                        "n=" + std::to_string(n) + " has no fixed point (exception set {2,3,7,11,15})");
        }
        return emit_partition(std::move(*cover), out);
    });
}

int wilf_cover_labels_in_set(const wilf_cover_set* cs, const wilf_partition* p) {
    if (!cs || !p) return 0;
    return wilf::labels_in_cover(p->value, cs->value) ? 1 : 0;
}

wilf_status wilf_compute_r(uint64_t n, uint64_t k, uint64_t* out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = wilf::compute_R(n, k);
        return WILF_OK;
    });
}

uint64_t wilf_log_preset_k(uint64_t n) { return n == 0 ? 1 : wilf::log_preset_K(n); }

wilf_status wilf_family_log_size(uint64_t n, uint64_t k, double* out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = wilf::family_log_size(n, k);
        return WILF_OK;
    });
}

wilf_status wilf_family_create(const wilf_family_options* options, wilf_family** out) {
    if (!options) return null_argument("options");
    if (!out) return null_argument("out");
    if (options->xs_count > 0 && !options->xs) return null_argument("options->xs");
    return guarded([&] {
        std::optional<uint64_t> r_override;
        if (options->r_override) r_override = options->r_override;
        std::optional<std::vector<uint64_t>> xs_override;
        if (options->xs) xs_override.emplace(options->xs, options->xs + options->xs_count);
        wilf::FamilyParams params = wilf::make_family_params(options->n, options->k, r_override, xs_override);
        wilf::CoverSet cover = wilf::CoverSet::for_weight(options->n);
        *out = new wilf_family{std::move(params), std::move(cover), wilf::PermutationSampler(options->seed)};
        return WILF_OK;
    });
}

void wilf_family_free(wilf_family* family) { delete family; }

uint64_t wilf_family_r(const wilf_family* family) { return family ? family->params.R : 0; }
uint64_t wilf_family_k(const wilf_family* family) { return family ? family->params.K : 0; }

double wilf_family_log_size_of(const wilf_family* family) {
    return family ? wilf::family_log_size_for(family->params.K, family->params.R) : 0.0;
}

wilf_status wilf_family_next(wilf_family* family, wilf_partition** out, uint64_t* mass) {
    if (!family) return null_argument("family");
    if (!out) return null_argument("out");
    return guarded([&] {
        wilf::FamilySpec spec{family->params,
                              family->sampler.next_tuple(family->params.K,
                                                         static_cast<std::uint32_t>(family->params.R))};
        wilf::FamilyResult result = wilf::build_family_member(spec, family->cover);
        if (auto* bad = std::get_if<wilf::Infeasible>(&result)) {
            if (mass) *mass = bad->mass.to_u64();
            return fail(WILF_ERR_INFEASIBLE, bad->reason);
        }
        if (mass) *mass = wilf::family_mass(spec).to_u64();
        return emit_partition(std::get<wilf::Partition>(std::move(result)), out);
    });
}

wilf_status wilf_asymptotic_log_f(uint64_t n, double* out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = wilf::asymptotic_log_f(n);
        return WILF_OK;
    });
}

wilf_status wilf_asymptotic_log_F(uint64_t n, double* out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = wilf::asymptotic_log_F(n);
        return WILF_OK;
    });
}

wilf_status wilf_q_distinct_squares(uint64_t k, wilf_text** out) {
    if (!out) return null_argument("out");
    return guarded([&] { return emit_text(wilf::q_distinct_squares(k).to_string(), out); });
}

wilf_status wilf_divisor_count(uint64_t x, uint64_t* out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = wilf::divisor_count(x).to_u64();
        return WILF_OK;
    });
}

wilf_status wilf_partitions_into_parts(uint64_t m, uint64_t r, wilf_text** out) {
    if (!out) return null_argument("out");
    return guarded([&] { return emit_text(wilf::partitions_into_parts(m, r).to_string(), out); });
}

wilf_status wilf_involution_count(uint64_t n, wilf_text** out) {
    if (!out) return null_argument("out");
    return guarded([&] { return emit_text(wilf::involution_count(n).to_string(), out); });
}

double wilf_meinardus_constant(void) { return wilf::meinardus_constant(); }

wilf_status wilf_upper_bound_F(uint64_t n, double* out) {
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = wilf::upper_bound_F(n);
        return WILF_OK;
    });
}

wilf_status wilf_report(const uint64_t* n_values, size_t count, wilf_report_format format, uint64_t wilf_limit,
                        uint64_t fixed_limit, wilf_text** out) {
    if (count > 0 && !n_values) return null_argument("n_values");
    if (!out) return null_argument("out");
    return guarded([&] {
        const wilf::ReportOptions options{wilf_limit, fixed_limit};
        const auto rows = wilf::report(std::span<const uint64_t>(n_values, count), options);
        switch (format) {
            case WILF_REPORT_CSV: return emit_text(wilf::report_csv(rows), out);
            case WILF_REPORT_JSON: return emit_text(wilf::report_json(rows), out);
        }
        return fail(WILF_ERR_INVALID_ARGUMENT, "unknown report format");
    });
}

}  // extern "C"
