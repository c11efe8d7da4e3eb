/* tslint:disable */
/* eslint-disable */

export class Curve {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    fwhm_nm: Float64Array;
    iris_width_deg: Float64Array;
    optimum_index: number;
    phase_range_rad: Float64Array;
    target_flux: number;
}

/**
 * Row-major maps, one row per wavelength; invalid phases are NaN.
 */
export class Maps {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    lambda_max_nm: number;
    lambda_min_nm: number;
    n_lambda: number;
    n_theta: number;
    phase: Float64Array;
    probability: Float64Array;
    theta_max_deg: number;
}

export class PhaseMatch {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    collinear_delta_kappa: number;
    comp_tilt_deg: number;
    opening_angle_deg: number;
}

export function emission_maps(pump_nm: number, length_mm: number, cut_deg: number, fwhm_nm: number, n: number): Maps;

export function iso_flux_curve(pump_nm: number, length_mm: number, cut_deg: number, reference_fwhm_nm: number, reference_width_deg: number): Curve;

export function phase_match(pump_nm: number, length_mm: number, cut_deg: number): PhaseMatch;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curve_free: (a: number, b: number) => void;
    readonly __wbg_get_curve_fwhm_nm: (a: number) => [number, number];
    readonly __wbg_get_curve_iris_width_deg: (a: number) => [number, number];
    readonly __wbg_get_curve_optimum_index: (a: number) => number;
    readonly __wbg_get_curve_phase_range_rad: (a: number) => [number, number];
    readonly __wbg_get_curve_target_flux: (a: number) => number;
    readonly __wbg_get_maps_lambda_max_nm: (a: number) => number;
    readonly __wbg_get_maps_lambda_min_nm: (a: number) => number;
    readonly __wbg_get_maps_n_lambda: (a: number) => number;
    readonly __wbg_get_maps_n_theta: (a: number) => number;
    readonly __wbg_get_maps_phase: (a: number) => [number, number];
    readonly __wbg_get_maps_probability: (a: number) => [number, number];
    readonly __wbg_get_maps_theta_max_deg: (a: number) => number;
    readonly __wbg_get_phasematch_collinear_delta_kappa: (a: number) => number;
    readonly __wbg_get_phasematch_comp_tilt_deg: (a: number) => number;
    readonly __wbg_get_phasematch_opening_angle_deg: (a: number) => number;
    readonly __wbg_maps_free: (a: number, b: number) => void;
    readonly __wbg_phasematch_free: (a: number, b: number) => void;
    readonly __wbg_set_curve_fwhm_nm: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curve_iris_width_deg: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curve_optimum_index: (a: number, b: number) => void;
    readonly __wbg_set_curve_phase_range_rad: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curve_target_flux: (a: number, b: number) => void;
    readonly __wbg_set_maps_lambda_max_nm: (a: number, b: number) => void;
    readonly __wbg_set_maps_lambda_min_nm: (a: number, b: number) => void;
    readonly __wbg_set_maps_n_lambda: (a: number, b: number) => void;
    readonly __wbg_set_maps_n_theta: (a: number, b: number) => void;
    readonly __wbg_set_maps_phase: (a: number, b: number, c: number) => void;
    readonly __wbg_set_maps_probability: (a: number, b: number, c: number) => void;
    readonly __wbg_set_maps_theta_max_deg: (a: number, b: number) => void;
    readonly __wbg_set_phasematch_collinear_delta_kappa: (a: number, b: number) => void;
    readonly __wbg_set_phasematch_comp_tilt_deg: (a: number, b: number) => void;
    readonly __wbg_set_phasematch_opening_angle_deg: (a: number, b: number) => void;
    readonly emission_maps: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly iso_flux_curve: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly phase_match: (a: number, b: number, c: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
