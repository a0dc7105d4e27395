/* tslint:disable */
/* eslint-disable */

/**
 * Verdict, β values, margins and `-K` for `Bl_Z(G/P)`, `parabolic` listing `S_P`.
 */
export function classify(family: string, rank: number, parabolic: string, codim: number): string;

/**
 * Verdict for every codimension `2..=dim`.
 */
export function codim_sweep(family: string, rank: number, parabolic: string): string;

/**
 * As [`classify`], plus nef and Mori generators and their pairing.
 */
export function cones(family: string, rank: number, parabolic: string, codim: number): string;

/**
 * Node positions, bonds and arrows for drawing the Dynkin diagram.
 */
export function diagram(family: string, rank: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly classify: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly codim_sweep: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly cones: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly diagram: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
