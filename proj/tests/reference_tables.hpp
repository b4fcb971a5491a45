// Generated by tests/make_reference_tables.py; do not edit by hand.
//
// Reference values tabulated with mpmath at 320-bit precision and
// exact rational coefficients, independent of the library code.
#pragma once

namespace superosc::testing {

struct ConvergenceRow {
  int n;
  const char* abs_err;  // |f_n(1/2) - e^{i}|, 40 significant digits
};

// Taylor-matched coefficients, uniform grid, a = 2, x = 1/2.
inline constexpr ConvergenceRow kMatchedConvergence[] = {
    {4, "0.005758510519635119642765366113315843926546"},
    {8, "0.000001625498573122756774336255294822048942974"},
    {16, "1.168303289715369918641208476077697635834e-15"},
    {24, "1.872652647720472595664632027273790515987e-26"},
    {32, "2.333801708746007526524191646734810052489e-38"},
};

// Binomial coefficients, uniform grid, a = 2, x = 1/2.
inline constexpr ConvergenceRow kBinomialConvergence[] = {
    {4, "0.09674616711701802482496777166123615121649"},
    {8, "0.04780715465599686653401271663432278114755"},
    {16, "0.02369198467793109839844234641371936566946"},
    {24, "0.01574116033038074657271919202674663574932"},
    {32, "0.01178493581764147406060782087074187424365"},
};

// Im(f'(x)/f(x)) at x = 1/20, uniform grid, a = 2.
inline constexpr const char* kLocalFreqN16 = "1.999999999999999999999999999996033025402";
inline constexpr const char* kLocalFreqN2 = "2.007460813420298209051269615886808864260";

}  // namespace superosc::testing
