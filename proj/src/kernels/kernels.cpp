#include "logwave/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace logwave::kernels {

const Backend* avx2_backend_impl();   // defined in avx2.cpp

const Backend* avx2_backend() { return avx2_backend_impl(); }

namespace {

const Backend* pick_default() {
    if (const char* env = std::getenv("LOGWAVE_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_backend();
        if (std::strcmp(env, "avx2") == 0) {
            const Backend* b = avx2_backend();
            if (!b)
                throw std::runtime_error(
                    "LOGWAVE_SIMD=avx2 requested but AVX2 is unavailable");
            return b;
        }
        if (std::strcmp(env, "auto") != 0)
            throw std::runtime_error(
                "LOGWAVE_SIMD must be scalar, avx2 or auto");
    }
    if (const Backend* b = avx2_backend()) return b;
    return &scalar_backend();
}

std::atomic<const Backend*> g_active{nullptr};

}  // namespace

const Backend& active() {
    const Backend* b = g_active.load(std::memory_order_acquire);
    if (!b) {
        b = pick_default();
        g_active.store(b, std::memory_order_release);
    }
    return *b;
}

void set_active(const Backend& b) {
    g_active.store(&b, std::memory_order_release);
}

std::string_view default_backend_name() { return pick_default()->name; }

}  // namespace logwave::kernels
