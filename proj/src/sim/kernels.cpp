#include "latwalk/sim/kernels.hpp"

namespace latwalk::sim {

bool cpu_has_avx2() {
#if defined(LATWALK_HAVE_AVX2_KERNEL) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Kernel& select_kernel(KernelKind kind) {
    switch (kind) {
        case KernelKind::scalar:
            return kScalarKernel;
        case KernelKind::avx2:
#if defined(LATWALK_HAVE_AVX2_KERNEL)
            if (cpu_has_avx2()) return kAvx2Kernel;
#endif
            throw ConfigError("avx2 kernel not available on this machine");
        case KernelKind::auto_detect:
        default:
#if defined(LATWALK_HAVE_AVX2_KERNEL)
            if (cpu_has_avx2()) return kAvx2Kernel;
#endif
            return kScalarKernel;
    }
}

}  // namespace latwalk::sim
