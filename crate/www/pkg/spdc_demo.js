/* @ts-self-types="./spdc_demo.d.ts" */

export class Curve {
    static __wrap(ptr) {
        const obj = Object.create(Curve.prototype);
        obj.__wbg_ptr = ptr;
        CurveFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        CurveFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_curve_free(ptr, 0);
    }
    /**
     * @returns {Float64Array}
     */
    get fwhm_nm() {
        const ret = wasm.__wbg_get_curve_fwhm_nm(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get iris_width_deg() {
        const ret = wasm.__wbg_get_curve_iris_width_deg(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {number}
     */
    get optimum_index() {
        const ret = wasm.__wbg_get_curve_optimum_index(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {Float64Array}
     */
    get phase_range_rad() {
        const ret = wasm.__wbg_get_curve_phase_range_rad(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {number}
     */
    get target_flux() {
        const ret = wasm.__wbg_get_curve_target_flux(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {Float64Array} arg0
     */
    set fwhm_nm(arg0) {
        const ptr0 = passArrayF64ToWasm0(arg0, wasm.__wbindgen_malloc);
        const len0 = WASM_VECTOR_LEN;
        wasm.__wbg_set_curve_fwhm_nm(this.__wbg_ptr, ptr0, len0);
    }
    /**
     * @param {Float64Array} arg0
     */
    set iris_width_deg(arg0) {
        const ptr0 = passArrayF64ToWasm0(arg0, wasm.__wbindgen_malloc);
        const len0 = WASM_VECTOR_LEN;
        wasm.__wbg_set_curve_iris_width_deg(this.__wbg_ptr, ptr0, len0);
    }
    /**
     * @param {number} arg0
     */
    set optimum_index(arg0) {
        wasm.__wbg_set_curve_optimum_index(this.__wbg_ptr, arg0);
    }
    /**
     * @param {Float64Array} arg0
     */
    set phase_range_rad(arg0) {
        const ptr0 = passArrayF64ToWasm0(arg0, wasm.__wbindgen_malloc);
        const len0 = WASM_VECTOR_LEN;
        wasm.__wbg_set_curve_phase_range_rad(this.__wbg_ptr, ptr0, len0);
    }
    /**
     * @param {number} arg0
     */
    set target_flux(arg0) {
        wasm.__wbg_set_curve_target_flux(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) Curve.prototype[Symbol.dispose] = Curve.prototype.free;

/**
 * Row-major maps, one row per wavelength; invalid phases are NaN.
 */
export class Maps {
    static __wrap(ptr) {
        const obj = Object.create(Maps.prototype);
        obj.__wbg_ptr = ptr;
        MapsFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        MapsFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_maps_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get lambda_max_nm() {
        const ret = wasm.__wbg_get_maps_lambda_max_nm(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get lambda_min_nm() {
        const ret = wasm.__wbg_get_maps_lambda_min_nm(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get n_lambda() {
        const ret = wasm.__wbg_get_maps_n_lambda(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get n_theta() {
        const ret = wasm.__wbg_get_maps_n_theta(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {Float64Array}
     */
    get phase() {
        const ret = wasm.__wbg_get_maps_phase(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get probability() {
        const ret = wasm.__wbg_get_maps_probability(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {number}
     */
    get theta_max_deg() {
        const ret = wasm.__wbg_get_maps_theta_max_deg(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set lambda_max_nm(arg0) {
        wasm.__wbg_set_maps_lambda_max_nm(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set lambda_min_nm(arg0) {
        wasm.__wbg_set_maps_lambda_min_nm(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set n_lambda(arg0) {
        wasm.__wbg_set_maps_n_lambda(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set n_theta(arg0) {
        wasm.__wbg_set_maps_n_theta(this.__wbg_ptr, arg0);
    }
    /**
     * @param {Float64Array} arg0
     */
    set phase(arg0) {
        const ptr0 = passArrayF64ToWasm0(arg0, wasm.__wbindgen_malloc);
        const len0 = WASM_VECTOR_LEN;
        wasm.__wbg_set_maps_phase(this.__wbg_ptr, ptr0, len0);
    }
    /**
     * @param {Float64Array} arg0
     */
    set probability(arg0) {
        const ptr0 = passArrayF64ToWasm0(arg0, wasm.__wbindgen_malloc);
        const len0 = WASM_VECTOR_LEN;
        wasm.__wbg_set_maps_probability(this.__wbg_ptr, ptr0, len0);
    }
    /**
     * @param {number} arg0
     */
    set theta_max_deg(arg0) {
        wasm.__wbg_set_maps_theta_max_deg(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) Maps.prototype[Symbol.dispose] = Maps.prototype.free;

export class PhaseMatch {
    static __wrap(ptr) {
        const obj = Object.create(PhaseMatch.prototype);
        obj.__wbg_ptr = ptr;
        PhaseMatchFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        PhaseMatchFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_phasematch_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get collinear_delta_kappa() {
        const ret = wasm.__wbg_get_phasematch_collinear_delta_kappa(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get comp_tilt_deg() {
        const ret = wasm.__wbg_get_phasematch_comp_tilt_deg(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get opening_angle_deg() {
        const ret = wasm.__wbg_get_phasematch_opening_angle_deg(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set collinear_delta_kappa(arg0) {
        wasm.__wbg_set_phasematch_collinear_delta_kappa(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set comp_tilt_deg(arg0) {
        wasm.__wbg_set_phasematch_comp_tilt_deg(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set opening_angle_deg(arg0) {
        wasm.__wbg_set_phasematch_opening_angle_deg(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) PhaseMatch.prototype[Symbol.dispose] = PhaseMatch.prototype.free;

/**
 * @param {number} pump_nm
 * @param {number} length_mm
 * @param {number} cut_deg
 * @param {number} fwhm_nm
 * @param {number} n
 * @returns {Maps}
 */
export function emission_maps(pump_nm, length_mm, cut_deg, fwhm_nm, n) {
    const ret = wasm.emission_maps(pump_nm, length_mm, cut_deg, fwhm_nm, n);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Maps.__wrap(ret[0]);
}

/**
 * @param {number} pump_nm
 * @param {number} length_mm
 * @param {number} cut_deg
 * @param {number} reference_fwhm_nm
 * @param {number} reference_width_deg
 * @returns {Curve}
 */
export function iso_flux_curve(pump_nm, length_mm, cut_deg, reference_fwhm_nm, reference_width_deg) {
    const ret = wasm.iso_flux_curve(pump_nm, length_mm, cut_deg, reference_fwhm_nm, reference_width_deg);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Curve.__wrap(ret[0]);
}

/**
 * @param {number} pump_nm
 * @param {number} length_mm
 * @param {number} cut_deg
 * @returns {PhaseMatch}
 */
export function phase_match(pump_nm, length_mm, cut_deg) {
    const ret = wasm.phase_match(pump_nm, length_mm, cut_deg);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return PhaseMatch.__wrap(ret[0]);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_30c8987f7c2ed4e2: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./spdc_demo_bg.js": import0,
    };
}

const CurveFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_curve_free(ptr, 1));
const MapsFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_maps_free(ptr, 1));
const PhaseMatchFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_phasematch_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function passArrayF64ToWasm0(arg, malloc) {
    const ptr = malloc(arg.length * 8, 8) >>> 0;
    getFloat64ArrayMemory0().set(arg, ptr / 8);
    WASM_VECTOR_LEN = arg.length;
    return ptr;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

let WASM_VECTOR_LEN = 0;

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('spdc_demo_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
