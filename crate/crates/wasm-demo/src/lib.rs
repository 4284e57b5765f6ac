//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Build with `wasm-pack build crates/wasm-demo --target web --out-dir www/pkg`.

mod dashboard;

pub use dashboard::Dashboard;

use wasm_bindgen::prelude::*;

#[wasm_bindgen(js_name = Dashboard)]
pub struct WasmDashboard {
    inner: Dashboard,
}

fn js_err(msg: String) -> JsValue {
    JsValue::from_str(&msg)
}

#[wasm_bindgen(js_class = Dashboard)]
impl WasmDashboard {
    #[wasm_bindgen(constructor)]
    pub fn new(text: &str, format: &str) -> Result<WasmDashboard, JsValue> {
        Dashboard::load(text, format)
            .map(|inner| WasmDashboard { inner })
            .map_err(js_err)
    }

    pub fn summary(&self) -> String {
        self.inner.summary()
    }

    #[wasm_bindgen(js_name = themeRiver)]
    pub fn theme_river(&self, granularity: &str) -> Result<String, JsValue> {
        self.inner.theme_river(granularity).map_err(js_err)
    }

    pub fn coauthors(&self, from: &str, to: &str, n: usize) -> Result<String, JsValue> {
        self.inner.coauthors(from, to, n).map_err(js_err)
    }

    #[wasm_bindgen(js_name = wordRace)]
    pub fn word_race(&self, from: &str, to: &str, k: usize, mode: &str, granularity: &str) -> Result<String, JsValue> {
        self.inner.word_race(from, to, k, mode, granularity).map_err(js_err)
    }
}
