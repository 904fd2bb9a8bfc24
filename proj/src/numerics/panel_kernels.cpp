#include "lightcone/numerics/panel_kernels.hpp"

#include "lightcone/errors.hpp"

namespace lightcone::numerics {

bool avx2_available() {
#if defined(LIGHTCONE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool available = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return available;
#else
    return false;
#endif
}

KernelBackend resolve_backend(KernelBackend requested) {
    switch (requested) {
    case KernelBackend::Auto:
        return avx2_available() ? KernelBackend::Avx2 : KernelBackend::Scalar;
    case KernelBackend::Avx2:
        if (!avx2_available()) {
            throw ConfigError("AVX2 kernel requested but not supported by this build or CPU");
        }
        return KernelBackend::Avx2;
    case KernelBackend::Scalar:
        return KernelBackend::Scalar;
    }
    return KernelBackend::Scalar;
}

void integrate_panels(const PanelIntegrand& f, std::span<const double> edges,
                      std::span<complex> values, std::span<double> l1, KernelBackend backend) {
    if (edges.size() < 2) {
        return;
    }
    if (values.size() + 1 != edges.size() || l1.size() + 1 != edges.size()) {
        throw DomainError("integrate_panels: output spans must have edges.size() - 1 entries");
    }
#if defined(LIGHTCONE_HAVE_AVX2)
    if (resolve_backend(backend) == KernelBackend::Avx2) {
        detail::integrate_panels_avx2(f, edges, values, l1);
        return;
    }
#else
    (void)resolve_backend(backend);
#endif
    detail::integrate_panels_scalar(f, edges, values, l1);
}

} // namespace lightcone::numerics
