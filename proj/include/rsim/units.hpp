#pragma once

// Internal unit system is SI (Pa, m, s, mol). Field units (psi, day, bbl)
// are converted at the I/O boundary only.

namespace rsim::units {

inline constexpr double psi = 6894.757293168;        // Pa
inline constexpr double day = 86400.0;               // s
inline constexpr double barrel = 0.158987294928;     // m3
inline constexpr double atm = 101325.0;              // Pa
inline constexpr double centipoise = 1.0e-3;         // Pa*s
inline constexpr double gas_constant = 8.31446261815324;  // J/(mol*K)
inline constexpr double surface_pressure = atm;      // Pa
inline constexpr double surface_temperature = 288.7; // K

inline constexpr double psi_to_pa(double p) { return p * psi; }
inline constexpr double pa_to_psi(double p) { return p / psi; }
inline constexpr double days_to_s(double t) { return t * day; }
inline constexpr double s_to_days(double t) { return t / day; }

} // namespace rsim::units
