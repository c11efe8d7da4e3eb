/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_curve_free: (a: number, b: number) => void;
export const __wbg_get_curve_fwhm_nm: (a: number) => [number, number];
export const __wbg_get_curve_iris_width_deg: (a: number) => [number, number];
export const __wbg_get_curve_optimum_index: (a: number) => number;
export const __wbg_get_curve_phase_range_rad: (a: number) => [number, number];
export const __wbg_get_curve_target_flux: (a: number) => number;
export const __wbg_get_maps_lambda_max_nm: (a: number) => number;
export const __wbg_get_maps_lambda_min_nm: (a: number) => number;
export const __wbg_get_maps_n_lambda: (a: number) => number;
export const __wbg_get_maps_n_theta: (a: number) => number;
export const __wbg_get_maps_phase: (a: number) => [number, number];
export const __wbg_get_maps_probability: (a: number) => [number, number];
export const __wbg_get_maps_theta_max_deg: (a: number) => number;
export const __wbg_get_phasematch_collinear_delta_kappa: (a: number) => number;
export const __wbg_get_phasematch_comp_tilt_deg: (a: number) => number;
export const __wbg_get_phasematch_opening_angle_deg: (a: number) => number;
export const __wbg_maps_free: (a: number, b: number) => void;
export const __wbg_phasematch_free: (a: number, b: number) => void;
export const __wbg_set_curve_fwhm_nm: (a: number, b: number, c: number) => void;
export const __wbg_set_curve_iris_width_deg: (a: number, b: number, c: number) => void;
export const __wbg_set_curve_optimum_index: (a: number, b: number) => void;
export const __wbg_set_curve_phase_range_rad: (a: number, b: number, c: number) => void;
export const __wbg_set_curve_target_flux: (a: number, b: number) => void;
export const __wbg_set_maps_lambda_max_nm: (a: number, b: number) => void;
export const __wbg_set_maps_lambda_min_nm: (a: number, b: number) => void;
export const __wbg_set_maps_n_lambda: (a: number, b: number) => void;
export const __wbg_set_maps_n_theta: (a: number, b: number) => void;
export const __wbg_set_maps_phase: (a: number, b: number, c: number) => void;
export const __wbg_set_maps_probability: (a: number, b: number, c: number) => void;
export const __wbg_set_maps_theta_max_deg: (a: number, b: number) => void;
export const __wbg_set_phasematch_collinear_delta_kappa: (a: number, b: number) => void;
export const __wbg_set_phasematch_comp_tilt_deg: (a: number, b: number) => void;
export const __wbg_set_phasematch_opening_angle_deg: (a: number, b: number) => void;
export const emission_maps: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const iso_flux_curve: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const phase_match: (a: number, b: number, c: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
