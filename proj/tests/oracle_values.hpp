#pragma once
// Generated by tests/oracles/oracles.py (mpmath, 40 digits). Do not edit.

namespace oracle {
inline constexpr double sigma_s3 = 43.823232716250654989;
inline constexpr double berger_half = 34.508633358528674707;
inline constexpr double torus_upper_0_5 = -0.91298401492188864560;
inline constexpr double torus_lower_0_5 = -3.6519360596875545824;
inline constexpr double torus_upper_0_1 = -0.012489445641733985497;
inline constexpr double torus_lower_0_1 = -1.2489445641733985497;
inline constexpr double torus_upper_0_02 = -0.00017085321307752975356;
inline constexpr double torus_lower_0_02 = -0.42713303269382438389;
inline constexpr double torus_coefficient = 5.7970871428686254506;
inline constexpr double case_ii_J_1000 = 5843.0976955000873319;
inline constexpr double hebey_vaugon_3_2 = 69.565045714423505407;
inline constexpr double sigma_s2 = 25.132741228718345908;
inline constexpr double wps_1_1_area = 3.1415926535897932385;
inline constexpr double wps_1_1_chern = 1.0000000000000000000;
inline constexpr double wps_1_1_om2 = 25.132741228718345908;
inline constexpr double wps_1_1_om1 = 8.8857658763167324940;
inline constexpr double wps_1_1_gb = 2.0000000000000000000;
inline constexpr double wps_1_1_jmax = 43.823232716250654989;
inline constexpr double wps_1_1_cs = 43.823232716250654989;
inline constexpr double wps_1_1_ell_star = 1.0000000000000000000;
inline constexpr double wps_1_1_main = 43.823232716250654989;
inline constexpr double wps_1_2_area = 2.0943951023931954923;
inline constexpr double wps_1_2_chern = 0.50000000000000000000;
inline constexpr double wps_1_2_om2 = 12.985249634837812052;
inline constexpr double wps_1_2_om1 = 4.4428829381583662470;
inline constexpr double wps_1_2_gb = 1.5000000000000000000;
inline constexpr double wps_1_2_jmax = 42.600336944806742317;
inline constexpr double wps_1_2_cs = 47.403028915870551186;
inline constexpr double wps_1_2_ell_star = 1.2048289933537482943;
inline constexpr double wps_1_2_main = 47.403028915870551186;
inline constexpr double wps_2_3_area = 1.2566370614359172954;
inline constexpr double wps_2_3_chern = 0.16666666666666666667;
inline constexpr double wps_2_3_om2 = 1.9640771849109522172;
inline constexpr double wps_2_3_om1 = 1.4809609793861220823;
inline constexpr double wps_2_3_gb = 0.83333333333333333333;
inline constexpr double wps_2_3_jmax = 43.294214180906026445;
inline constexpr double wps_2_3_cs = 45.032244025421437295;
inline constexpr double wps_2_3_ell_star = 2.3090590192765471338;
inline constexpr double wps_2_3_main = 45.032244025421437295;
inline constexpr double wps_3_5_area = 0.78539816339744830962;
inline constexpr double wps_3_5_chern = 0.066666666666666666667;
inline constexpr double wps_3_5_om2 = 0.53653748311975016967;
inline constexpr double wps_3_5_om1 = 0.59238439175444883294;
inline constexpr double wps_3_5_gb = 0.53333333333333333333;
inline constexpr double wps_3_5_jmax = 43.042350718078082194;
inline constexpr double wps_3_5_cs = 45.749908184603299387;
inline constexpr double wps_3_5_ell_star = 3.5343069290066907071;
inline constexpr double wps_3_5_main = 45.749908184603299387;
inline constexpr double wps_7_11_area = 0.34906585039886591538;
inline constexpr double wps_7_11_chern = 0.012987012987012987013;
inline constexpr double wps_7_11_om2 = 0.044115675778034897892;
inline constexpr double wps_7_11_om1 = 0.11539955683528224018;
inline constexpr double wps_7_11_gb = 0.23376623376623376623;
inline constexpr double wps_7_11_jmax = 43.185365644211773824;
inline constexpr double wps_7_11_cs = 45.328074769726091775;
inline constexpr double wps_7_11_ell_star = 8.1601727691456782703;
inline constexpr double wps_7_11_main = 45.328074769726091775;
inline constexpr double kappa_2_3_0_1 = 2.4948096885813148789;
inline constexpr double kappa_2_3_0_3 = 2.9200000000000000000;
inline constexpr double kappa_2_3_0_5 = 3.5562130177514792899;
inline constexpr double kappa_2_3_0_7 = 4.5702479338842975207;
inline constexpr double kappa_2_3_0_9 = 6.3333333333333333333;
// first nonzero eigenvalue of S^2(1/2) by inverse power iteration: 7.99989719
inline constexpr double sphere_half_eigenvalue = 8.0000000000000000000;
}  // namespace oracle
