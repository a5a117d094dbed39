/* @ts-self-types="./regionstereo_web.d.ts" */

export class Demo {
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        DemoFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_demo_free(ptr, 0);
    }
    /**
     * @returns {Uint8Array | undefined}
     */
    disparity_rgba() {
        const ret = wasm.demo_disparity_rgba(this.__wbg_ptr);
        let v1;
        if (ret[0] !== 0) {
            v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
            wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        }
        return v1;
    }
    /**
     * Filters the last match; `undefined` before any match has run.
     * @param {number} alpha
     * @returns {FilterSummary | undefined}
     */
    filter(alpha) {
        const ret = wasm.demo_filter(this.__wbg_ptr, alpha);
        if (ret[2]) {
            throw takeFromExternrefTable0(ret[1]);
        }
        return ret[0] === 0 ? undefined : FilterSummary.__wrap(ret[0]);
    }
    /**
     * @returns {Uint8Array | undefined}
     */
    filtered_rgba() {
        const ret = wasm.demo_filtered_rgba(this.__wbg_ptr);
        let v1;
        if (ret[0] !== 0) {
            v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
            wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        }
        return v1;
    }
    /**
     * @returns {number}
     */
    height() {
        const ret = wasm.demo_height(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {Uint8Array}
     */
    left_rgba() {
        const ret = wasm.demo_left_rgba(this.__wbg_ptr);
        var v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        return v1;
    }
    /**
     * @param {number} width
     * @param {number} height
     * @param {number} seed
     */
    constructor(width, height, seed) {
        const ret = wasm.demo_new(width, height, seed);
        this.__wbg_ptr = ret;
        DemoFinalization.register(this, this.__wbg_ptr, this);
        return this;
    }
    /**
     * @returns {Uint8Array}
     */
    right_rgba() {
        const ret = wasm.demo_right_rgba(this.__wbg_ptr);
        var v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        return v1;
    }
    /**
     * @param {number} n
     * @param {number} m
     * @param {number} d_max
     * @param {number} iterations
     * @returns {MatchSummary}
     */
    run_global(n, m, d_max, iterations) {
        const ret = wasm.demo_run_global(this.__wbg_ptr, n, m, d_max, iterations);
        if (ret[2]) {
            throw takeFromExternrefTable0(ret[1]);
        }
        return MatchSummary.__wrap(ret[0]);
    }
    /**
     * @param {number} m
     * @param {number} d_max
     * @param {number} v_lg
     * @returns {MatchSummary}
     */
    run_linegrow(m, d_max, v_lg) {
        const ret = wasm.demo_run_linegrow(this.__wbg_ptr, m, d_max, v_lg);
        if (ret[2]) {
            throw takeFromExternrefTable0(ret[1]);
        }
        return MatchSummary.__wrap(ret[0]);
    }
    /**
     * @returns {Uint8Array | undefined}
     */
    status_rgba() {
        const ret = wasm.demo_status_rgba(this.__wbg_ptr);
        let v1;
        if (ret[0] !== 0) {
            v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
            wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        }
        return v1;
    }
    /**
     * @returns {Uint8Array}
     */
    truth_rgba() {
        const ret = wasm.demo_truth_rgba(this.__wbg_ptr);
        var v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        return v1;
    }
    /**
     * @returns {number}
     */
    width() {
        const ret = wasm.demo_width(this.__wbg_ptr);
        return ret >>> 0;
    }
}
if (Symbol.dispose) Demo.prototype[Symbol.dispose] = Demo.prototype.free;

export class FilterSummary {
    static __wrap(ptr) {
        const obj = Object.create(FilterSummary.prototype);
        obj.__wbg_ptr = ptr;
        FilterSummaryFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        FilterSummaryFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_filtersummary_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get r_d_after() {
        const ret = wasm.__wbg_get_filtersummary_r_d_after(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get r_d_before() {
        const ret = wasm.__wbg_get_filtersummary_r_d_before(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get retained_fraction() {
        const ret = wasm.__wbg_get_filtersummary_retained_fraction(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get ve() {
        const ret = wasm.__wbg_get_filtersummary_ve(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set r_d_after(arg0) {
        wasm.__wbg_set_filtersummary_r_d_after(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set r_d_before(arg0) {
        wasm.__wbg_set_filtersummary_r_d_before(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set retained_fraction(arg0) {
        wasm.__wbg_set_filtersummary_retained_fraction(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set ve(arg0) {
        wasm.__wbg_set_filtersummary_ve(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) FilterSummary.prototype[Symbol.dispose] = FilterSummary.prototype.free;

export class MatchSummary {
    static __wrap(ptr) {
        const obj = Object.create(MatchSummary.prototype);
        obj.__wbg_ptr = ptr;
        MatchSummaryFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        MatchSummaryFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_matchsummary_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get estimated() {
        const ret = wasm.__wbg_get_matchsummary_estimated(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get idle() {
        const ret = wasm.__wbg_get_matchsummary_idle(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get mean_line() {
        const ret = wasm.__wbg_get_matchsummary_mean_line(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get r_d() {
        const ret = wasm.__wbg_get_matchsummary_r_d(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get roots() {
        const ret = wasm.__wbg_get_matchsummary_roots(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @param {number} arg0
     */
    set estimated(arg0) {
        wasm.__wbg_set_matchsummary_estimated(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set idle(arg0) {
        wasm.__wbg_set_matchsummary_idle(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set mean_line(arg0) {
        wasm.__wbg_set_matchsummary_mean_line(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set r_d(arg0) {
        wasm.__wbg_set_matchsummary_r_d(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set roots(arg0) {
        wasm.__wbg_set_matchsummary_roots(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) MatchSummary.prototype[Symbol.dispose] = MatchSummary.prototype.free;
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
        "./regionstereo_web_bg.js": import0,
    };
}

const DemoFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_demo_free(ptr, 1));
const FilterSummaryFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_filtersummary_free(ptr, 1));
const MatchSummaryFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_matchsummary_free(ptr, 1));

function getArrayU8FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getUint8ArrayMemory0().subarray(ptr / 1, ptr / 1 + len);
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

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
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
        module_or_path = new URL('regionstereo_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
