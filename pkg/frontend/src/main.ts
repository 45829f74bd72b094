import './style.css';
import { buildPanel } from './panel';
import { SpineView } from './scene';
import { TeleopStore } from './store';
import type { WorkspaceResponse } from './api';

const app = document.getElementById('app')!;
const bootBanner = document.createElement('div');
bootBanner.className = 'banner offline';
bootBanner.textContent = 'waiting for service...';
bootBanner.hidden = true;

const panelRoot = document.createElement('aside');
panelRoot.id = 'panel';
const viewport = document.createElement('main');
viewport.id = 'viewport';
app.append(bootBanner, panelRoot, viewport);

const store = new TeleopStore();

async function boot(): Promise<void> {
  try {
    await store.init();
  } catch {
    bootBanner.hidden = false;
    setTimeout(boot, 1500);
    return;
  }
  bootBanner.hidden = true;

  buildPanel(panelRoot, store);
  const view = new SpineView(viewport, {
    discRadius: store.params!.params.disc_height,
    tipRadius: 6,
  });

  let lastState = store.latest;
  let lastCloud: WorkspaceResponse | null = null;
  store.subscribe(() => {
    if (store.latest && store.latest !== lastState) {
      lastState = store.latest;
      view.setState(store.latest);
    }
    view.setStale(store.stale);
    if (store.cloud !== lastCloud) {
      lastCloud = store.cloud;
      view.setCloud(store.cloud ? store.cloud.points_mm : null);
    }
    view.setCloudVisible(store.overlayOn);
  });
}

void boot();
