#include "grasscf/verify.hpp"

#include "grasscf/errors.hpp"
#include "grasscf/reconstruct.hpp"

#include <utility>

namespace grasscf {

VerifyReport verify_trace(const Trace& trace, const PluckerVector& original) {
    VerifyReport report;
    auto add = [&](std::string name, bool passed, std::string detail = "") {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
        return report.checks.back().passed;
    };

    bool shape_ok = true;
    try {
        validate_trace_shape(trace);
        if (!trace.complete())
            throw ValidationError("trace is not completed (no terminal coordinate)");
        if (trace.k != original.k() || trace.n_initial != original.n())
            throw DimensionError("trace dimensions do not match the vector");
        add("trace_shape", true);
    } catch (const Error& e) {
        shape_ok = add("trace_shape", false, e.what());
    }
    if (!shape_ok)
        return report;

    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < trace.steps.size() && ok; ++i) {
            Int d = determinant(trace.steps[i].transform.matrix());
            if (d != 1 && d != -1) {
                ok = false;
                detail = "step " + std::to_string(i) + " has determinant " + to_decimal(d);
            }
        }
        add("unimodular_matrices", ok, detail);
    }

    bool replay_ok = true;
    bool descent_ok = true;
    std::string replay_detail;
    std::string descent_detail;
    try {
        PluckerVector current = original;
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const TraceStep& step = trace.steps[i];
            // Rebuild the transform from the matrix alone so the check does
            // not trust any structured fast path.
            UnimodularTransform u = general_transform(step.transform.matrix());
            switch (step.label) {
            case StageLabel::MaxSubtract: {
                MaxAbs before = max_abs(current);
                current = push_plucker(current, u);
                MaxAbs after = max_abs(current);
                bool decreased = after.value < before.value ||
                                 (after.value == before.value && after.count < before.count);
                if (!decreased && descent_ok) {
                    descent_ok = false;
                    descent_detail = "step " + std::to_string(i) +
                                     " did not decrease (max, count)";
                }
                break;
            }
            case StageLabel::MinSubtract: {
                auto before = min_nonzero_abs(current);
                current = push_plucker(current, u);
                auto after = min_nonzero_abs(current);
                bool decreased = has_zero_entry(current) || (before && after && *after < *before);
                if (!decreased && descent_ok) {
                    descent_ok = false;
                    descent_detail = "step " + std::to_string(i) +
                                     " did not decrease the non-zero minimum";
                }
                break;
            }
            case StageLabel::CoordinateDrop:
                current = restrict_drop_last(push_plucker(current, u));
                break;
            default:
                current = push_plucker(current, u);
                break;
            }
        }
        if (current.n() != trace.k) {
            replay_ok = false;
            replay_detail = "replay finished at dimension " + std::to_string(current.n());
        } else if (current.at_rank(0) != *trace.terminal_p_hat) {
            replay_ok = false;
            replay_detail = "replay terminal " + to_decimal(current.at_rank(0)) +
                            " != recorded " + to_decimal(*trace.terminal_p_hat);
        }
    } catch (const Error& e) {
        replay_ok = false;
        replay_detail = e.what();
    }
    add("pushforward_replay", replay_ok, replay_detail);
    add("descent_certificates", descent_ok, descent_detail);

    {
        Int g = plucker_gcd(original);
        bool ok = abs_of(*trace.terminal_p_hat) == g;
        add("terminal_gcd", ok,
            ok ? "" : "|p_hat| != gcd " + to_decimal(g));
    }

    {
        bool ok = true;
        std::string detail;
        try {
            ReconstructionResult res = assemble(trace, original);
            if (compute_plucker(res.matrix) != original) {
                ok = false;
                detail = "rebuilt matrix has a different Pluecker vector";
            }
        } catch (const Error& e) {
            ok = false;
            detail = e.what();
        }
        add("reconstruction", ok, detail);
    }

    return report;
}

} // namespace grasscf
