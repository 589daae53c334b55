/* tslint:disable */
/* eslint-disable */

/**
 * Connected characters of degree `degree` and length `sigma`.
 */
export function characters(degree: number, sigma: number): string;

/**
 * Lower bound against upper bound in `k` for one `δ`, per branch of the
 * case table. Values stay exact; the page divides for plotting.
 */
export function curves(r: number, assumption: string, delta: number, mu_cap: number, k_to: number): string;

/**
 * Derivation trace for residue `r` (0..=3), or all residues when `r < 0`.
 */
export function derive(r: number, assumption: string, mu_cap: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly characters: (a: number, b: number) => [number, number];
    readonly curves: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly derive: (a: number, b: number, c: number, d: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
