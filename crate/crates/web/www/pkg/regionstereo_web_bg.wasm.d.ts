/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_demo_free: (a: number, b: number) => void;
export const __wbg_filtersummary_free: (a: number, b: number) => void;
export const __wbg_get_filtersummary_r_d_after: (a: number) => number;
export const __wbg_get_filtersummary_r_d_before: (a: number) => number;
export const __wbg_get_filtersummary_retained_fraction: (a: number) => number;
export const __wbg_get_filtersummary_ve: (a: number) => number;
export const __wbg_get_matchsummary_estimated: (a: number) => number;
export const __wbg_get_matchsummary_idle: (a: number) => number;
export const __wbg_get_matchsummary_mean_line: (a: number) => number;
export const __wbg_get_matchsummary_r_d: (a: number) => number;
export const __wbg_get_matchsummary_roots: (a: number) => number;
export const __wbg_matchsummary_free: (a: number, b: number) => void;
export const __wbg_set_filtersummary_r_d_after: (a: number, b: number) => void;
export const __wbg_set_filtersummary_r_d_before: (a: number, b: number) => void;
export const __wbg_set_filtersummary_retained_fraction: (a: number, b: number) => void;
export const __wbg_set_filtersummary_ve: (a: number, b: number) => void;
export const __wbg_set_matchsummary_estimated: (a: number, b: number) => void;
export const __wbg_set_matchsummary_idle: (a: number, b: number) => void;
export const __wbg_set_matchsummary_mean_line: (a: number, b: number) => void;
export const __wbg_set_matchsummary_r_d: (a: number, b: number) => void;
export const __wbg_set_matchsummary_roots: (a: number, b: number) => void;
export const demo_disparity_rgba: (a: number) => [number, number];
export const demo_filter: (a: number, b: number) => [number, number, number];
export const demo_filtered_rgba: (a: number) => [number, number];
export const demo_height: (a: number) => number;
export const demo_left_rgba: (a: number) => [number, number];
export const demo_new: (a: number, b: number, c: number) => number;
export const demo_right_rgba: (a: number) => [number, number];
export const demo_run_global: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const demo_run_linegrow: (a: number, b: number, c: number, d: number) => [number, number, number];
export const demo_status_rgba: (a: number) => [number, number];
export const demo_truth_rgba: (a: number) => [number, number];
export const demo_width: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
