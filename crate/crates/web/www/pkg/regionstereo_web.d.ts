/* tslint:disable */
/* eslint-disable */

export class Demo {
    free(): void;
    [Symbol.dispose](): void;
    disparity_rgba(): Uint8Array | undefined;
    /**
     * Filters the last match; `undefined` before any match has run.
     */
    filter(alpha: number): FilterSummary | undefined;
    filtered_rgba(): Uint8Array | undefined;
    height(): number;
    left_rgba(): Uint8Array;
    constructor(width: number, height: number, seed: number);
    right_rgba(): Uint8Array;
    run_global(n: number, m: number, d_max: number, iterations: number): MatchSummary;
    run_linegrow(m: number, d_max: number, v_lg: number): MatchSummary;
    status_rgba(): Uint8Array | undefined;
    truth_rgba(): Uint8Array;
    width(): number;
}

export class FilterSummary {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    r_d_after: number;
    r_d_before: number;
    retained_fraction: number;
    ve: number;
}

export class MatchSummary {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    estimated: number;
    idle: number;
    mean_line: number;
    r_d: number;
    roots: number;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_demo_free: (a: number, b: number) => void;
    readonly __wbg_filtersummary_free: (a: number, b: number) => void;
    readonly __wbg_get_filtersummary_r_d_after: (a: number) => number;
    readonly __wbg_get_filtersummary_r_d_before: (a: number) => number;
    readonly __wbg_get_filtersummary_retained_fraction: (a: number) => number;
    readonly __wbg_get_filtersummary_ve: (a: number) => number;
    readonly __wbg_get_matchsummary_estimated: (a: number) => number;
    readonly __wbg_get_matchsummary_idle: (a: number) => number;
    readonly __wbg_get_matchsummary_mean_line: (a: number) => number;
    readonly __wbg_get_matchsummary_r_d: (a: number) => number;
    readonly __wbg_get_matchsummary_roots: (a: number) => number;
    readonly __wbg_matchsummary_free: (a: number, b: number) => void;
    readonly __wbg_set_filtersummary_r_d_after: (a: number, b: number) => void;
    readonly __wbg_set_filtersummary_r_d_before: (a: number, b: number) => void;
    readonly __wbg_set_filtersummary_retained_fraction: (a: number, b: number) => void;
    readonly __wbg_set_filtersummary_ve: (a: number, b: number) => void;
    readonly __wbg_set_matchsummary_estimated: (a: number, b: number) => void;
    readonly __wbg_set_matchsummary_idle: (a: number, b: number) => void;
    readonly __wbg_set_matchsummary_mean_line: (a: number, b: number) => void;
    readonly __wbg_set_matchsummary_r_d: (a: number, b: number) => void;
    readonly __wbg_set_matchsummary_roots: (a: number, b: number) => void;
    readonly demo_disparity_rgba: (a: number) => [number, number];
    readonly demo_filter: (a: number, b: number) => [number, number, number];
    readonly demo_filtered_rgba: (a: number) => [number, number];
    readonly demo_height: (a: number) => number;
    readonly demo_left_rgba: (a: number) => [number, number];
    readonly demo_new: (a: number, b: number, c: number) => number;
    readonly demo_right_rgba: (a: number) => [number, number];
    readonly demo_run_global: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly demo_run_linegrow: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly demo_status_rgba: (a: number) => [number, number];
    readonly demo_truth_rgba: (a: number) => [number, number];
    readonly demo_width: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
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
