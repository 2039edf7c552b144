#include "fockcas/halfint.hpp"

namespace fockcas {

std::string HalfInt::str() const {
    if (is_integer()) {
        return std::to_string(twice_ / 2);
    }
    return std::to_string(twice_) + "/2";
}

} // namespace fockcas
