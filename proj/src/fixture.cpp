#include "fss/fixture.hpp"

namespace fss::fixture {

const std::array<UniversityRecord, 60>& table3() {
    static const std::array<UniversityRecord, 60> records = {{
    {"Vita - Salute San Raffaele", MacroRegion::North, 63, 3.27, 1, 85, 2.42, 1, -0.85, 0, std::nullopt},
    {"Salerno", MacroRegion::South, 448, 0.97, 20, 417, 1.22, 6, 0.25, 14, 74},
    {"Napoli 'Federico II'", MacroRegion::South, 1580, 0.77, 42, 1453, 1.04, 16, 0.27, 26, 63},
    {"del Salento", MacroRegion::South, 261, 1.00, 18, 228, 1.11, 9, 0.11, 9, 53},
    {"Napoli 'Parthenope'", MacroRegion::South, 122, 0.65, 51, 118, 1.00, 25, 0.35, 26, 52},
    {"SISSA - Trieste", MacroRegion::North, 50, 1.72, 3, 60, 1.85, 2, 0.13, 1, 50},
    {"Urbino 'Carlo Bo'", MacroRegion::Center, 148, 0.65, 50, 121, 0.96, 28, 0.31, 22, 45},
    {"Catania", MacroRegion::South, 823, 0.63, 52, 672, 0.95, 30, 0.32, 22, 43},
    {"Politecnico di Bari", MacroRegion::South, 219, 0.77, 43, 179, 0.96, 26, 0.20, 17, 40},
    {"Messina", MacroRegion::South, 717, 0.62, 53, 618, 0.92, 32, 0.30, 21, 40},
    {"Politecnica delle Marche", MacroRegion::Center, 385, 0.93, 27, 365, 1.03, 17, 0.10, 10, 38},
    {"Milano Bicocca", MacroRegion::North, 458, 1.11, 12, 436, 1.14, 8, 0.03, 4, 36},
    {"Bergamo", MacroRegion::North, 90, 0.48, 60, 86, 0.86, 39, 0.38, 21, 36},
    {"Firenze", MacroRegion::Center, 1022, 1.02, 17, 878, 1.09, 12, 0.07, 5, 31},
    {"Perugia", MacroRegion::Center, 679, 0.85, 34, 596, 1.00, 24, 0.15, 10, 30},
    {"Roma Tre", MacroRegion::Center, 252, 0.94, 24, 245, 1.03, 18, 0.09, 6, 26},
    {"Seconda Napoli", MacroRegion::South, 585, 0.73, 44, 524, 0.92, 33, 0.19, 11, 26},
    {"Magna Grecia di Catanzaro", MacroRegion::South, 157, 0.78, 41, 138, 0.93, 31, 0.15, 10, 25},
    {"Cagliari", MacroRegion::South, 573, 0.61, 55, 498, 0.82, 43, 0.21, 12, 22},
    {"della Calabria", MacroRegion::South, 439, 0.98, 19, 409, 1.04, 15, 0.07, 4, 22},
    {"Roma 'La Sapienza'", MacroRegion::Center, 2339, 0.69, 45, 1945, 0.87, 36, 0.18, 9, 20},
    {"Padova", MacroRegion::North, 1335, 1.36, 6, 1271, 1.26, 5, -0.10, 1, 20},
    {"Ca' Foscari Venezia", MacroRegion::North, 103, 0.68, 47, 85, 0.86, 38, 0.18, 9, 20},
    {"Mediterranea di Reggio Calabria", MacroRegion::South, 139, 0.65, 49, 137, 0.85, 40, 0.20, 9, 19},
    {"Pisa", MacroRegion::Center, 955, 0.95, 23, 841, 1.02, 19, 0.07, 4, 18},
    {"Camerino", MacroRegion::Center, 189, 0.60, 57, 192, 0.75, 55, 0.15, 2, 4},
    {"dell'Aquila", MacroRegion::South, 425, 0.52, 59, 362, 0.75, 57, 0.23, 2, 3},
    {"Palermo", MacroRegion::South, 963, 0.68, 46, 848, 0.82, 45, 0.13, 1, 2},
    {"Trento", MacroRegion::North, 239, 1.51, 4, 238, 1.40, 4, -0.11, 0, 0},
    {"Verona", MacroRegion::North, 349, 1.33, 7, 326, 1.16, 7, -0.17, 0, 0},
    {"Torino", MacroRegion::North, 1078, 1.14, 11, 1010, 1.10, 11, -0.05, 0, 0},
    {"Scuola Superiore S.Anna", MacroRegion::Center, 43, 2.16, 2, 53, 1.80, 3, -0.36, -1, -2},
    {"Cattolica del Sacro Cuore", MacroRegion::North, 740, 0.96, 22, 618, 1.00, 23, 0.04, -1, -3},
    {"Milano", MacroRegion::North, 1358, 1.22, 8, 1210, 1.10, 10, -0.11, -2, -4},
    {"Bologna", MacroRegion::North, 1542, 1.14, 10, 1385, 1.06, 14, -0.08, -4, -8},
    {"Pavia", MacroRegion::North, 604, 0.93, 26, 512, 0.95, 29, 0.03, -3, -9},
    {"Ferrara", MacroRegion::North, 389, 1.07, 14, 349, 1.02, 20, -0.05, -6, -13},
    {"Foggia", MacroRegion::South, 158, 1.06, 16, 146, 1.00, 22, -0.06, -6, -14},
    {"'Campus Bio-medico'", MacroRegion::Center, 78, 1.38, 5, 96, 1.09, 13, -0.30, -8, -15},
    {"del Sannio", MacroRegion::South, 108, 0.90, 29, 108, 0.91, 34, 0.01, -5, -16},
    {"Politecnico di Milano", MacroRegion::North, 819, 1.18, 9, 835, 1.01, 21, -0.17, -12, -24},
    {"Modena e Reggio Emilia", MacroRegion::North, 523, 0.84, 35, 470, 0.83, 42, -0.01, -7, -28},
    {"dell'Insubria", MacroRegion::North, 248, 0.92, 28, 218, 0.86, 37, -0.06, -9, -28},
    {"Genova", MacroRegion::North, 746, 0.86, 33, 699, 0.85, 41, -0.01, -8, -30},
    {"della Toscana", MacroRegion::Center, 145, 1.09, 13, 151, 0.96, 27, -0.13, -14, -30},
    {"Cassino", MacroRegion::Center, 116, 0.68, 48, 104, 0.77, 52, 0.09, -4, -33},
    {"Trieste", MacroRegion::North, 392, 0.84, 37, 343, 0.81, 47, -0.03, -10, -43},
    {"Politecnico di Torino", MacroRegion::North, 583, 1.06, 15, 576, 0.90, 35, -0.16, -20, -44},
    {"Bari", MacroRegion::South, 848, 0.82, 38, 748, 0.81, 48, -0.01, -10, -45},
    {"Sassari", MacroRegion::South, 375, 0.54, 58, 326, 0.67, 59, 0.13, -1, -50},
    {"Parma", MacroRegion::North, 625, 0.86, 32, 533, 0.81, 46, -0.05, -14, -50},
    {"Teramo", MacroRegion::South, 89, 0.79, 39, 89, 0.79, 50, 0.00, -11, -52},
    {"Brescia", MacroRegion::North, 380, 0.94, 25, 359, 0.82, 44, -0.12, -19, -54},
    {"Gabriele D'Annunzio", MacroRegion::South, 331, 0.78, 40, 307, 0.78, 51, 0.00, -11, -55},
    {"del Molise", MacroRegion::South, 129, 0.62, 54, 117, 0.68, 58, 0.06, -4, -67},
    {"Piemonte Orientale A. Avogadro", MacroRegion::North, 186, 0.97, 21, 174, 0.81, 49, -0.17, -28, -72},
    {"Roma 'Tor Vergata'", MacroRegion::Center, 908, 0.84, 36, 775, 0.76, 54, -0.08, -18, -75},
    {"Udine", MacroRegion::North, 370, 0.89, 30, 358, 0.76, 53, -0.13, -23, -77},
    {"Siena", MacroRegion::Center, 451, 0.88, 31, 330, 0.75, 56, -0.14, -25, -86},
    {"della Basilicata", MacroRegion::South, 225, 0.60, 56, 219, 0.64, 60, 0.03, -4, -100},
    }};
    return records;
}

const std::array<RegionReference, 3>& table4() {
    static const std::array<RegionReference, 3> refs = {{
        {MacroRegion::North, 24, 5, 15, -14, 50, -77},
        {MacroRegion::Center, 14, 8, 6, -2, 45, -86},
        {MacroRegion::South, 22, 14, 8, 4, 74, -100},
    }};
    return refs;
}

}  // namespace fss::fixture
