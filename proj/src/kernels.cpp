#include "bellswap/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bellswap::kernels {

namespace {

const Backend* g_selected = nullptr;

const Backend* pick_auto() {
    if (const Backend* b = avx2_backend()) return b;
    if (const Backend* b = neon_backend()) return b;
    return &scalar_backend();
}

}  // namespace

void select_backend(std::string_view name) {
    if (name == "auto" || name.empty()) {
        g_selected = pick_auto();
        return;
    }
    if (name == "scalar") {
        g_selected = &scalar_backend();
        return;
    }
    if (name == "avx2") {
        if (const Backend* b = avx2_backend()) {
            g_selected = b;
            return;
        }
        throw std::invalid_argument("avx2 kernels unavailable on this machine");
    }
    if (name == "neon") {
        if (const Backend* b = neon_backend()) {
            g_selected = b;
            return;
        }
        throw std::invalid_argument("neon kernels unavailable on this machine");
    }
    throw std::invalid_argument("unknown kernel backend: " + std::string(name));
}

const Backend& active() {
    if (!g_selected) {
        const char* env = std::getenv("BELLSWAP_KERNEL");
        if (env) {
            try {
                select_backend(env);
            } catch (const std::invalid_argument&) {
                g_selected = pick_auto();
            }
        } else {
            g_selected = pick_auto();
        }
    }
    return *g_selected;
}

std::vector<const Backend*> available_backends() {
    std::vector<const Backend*> out{&scalar_backend()};
    if (const Backend* b = avx2_backend()) out.push_back(b);
    if (const Backend* b = neon_backend()) out.push_back(b);
    return out;
}

}  // namespace bellswap::kernels
