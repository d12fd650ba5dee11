// SPDX-License-Identifier: Apache-2.0
#include "vlcpos/reference_data.hpp"

namespace vlcpos::reference {

const std::array<PublishedRow, 10> kPositionTable = {{
    {{2.50, 2.50, 0.0}, {2.5009, 2.5009, 0.0}, 0.0013},
    {{2.23, 2.23, 0.0}, {2.2336, 2.2336, 0.0}, 0.0050},
    {{1.96, 1.96, 0.0}, {1.9515, 1.9515, 0.0}, 0.0118},
    {{1.69, 1.69, 0.0}, {1.6724, 1.6724, 0.0}, 0.0247},
    {{1.42, 1.42, 0.0}, {1.3933, 1.3933, 0.0}, 0.0376},
    {{1.15, 1.15, 0.0}, {1.1149, 1.1149, 0.0}, 0.0495},
    {{0.88, 0.88, 0.0}, {0.8363, 0.8363, 0.0}, 0.0616},
    {{0.61, 0.61, 0.0}, {0.5591, 0.5591, 0.0}, 0.0719},
    {{0.34, 0.34, 0.0}, {0.2851, 0.2851, 0.0}, 0.0776},
    {{0.07, 0.07, 0.0}, {0.0136, 0.0136, 0.0}, 0.0797},
}};

}  // namespace vlcpos::reference
